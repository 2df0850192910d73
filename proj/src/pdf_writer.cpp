#include "momentum/pdf_writer.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace momentum::report {

namespace {

std::string escape_pdf_text(const std::string& line) {
    std::string out;
    out.reserve(line.size());
    for (char c : line) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '(': out += "\\("; break;
            case ')': out += "\\)"; break;
            case '\t': out += "    "; break;
            default:
                // Base-14 fonts with no encoding tricks: keep printable ASCII.
                if (c >= 0x20 && c < 0x7F) {
                    out += c;
                } else {
                    out += '?';
                }
        }
    }
    return out;
}

std::vector<std::string> wrap_lines(const std::string& text, int columns) {
    std::vector<std::string> lines;
    std::string current;
    auto flush_wrapped = [&](const std::string& line) {
        if (line.empty()) {
            lines.emplace_back();
            return;
        }
        for (std::size_t pos = 0; pos < line.size(); pos += static_cast<std::size_t>(columns)) {
            lines.push_back(line.substr(pos, static_cast<std::size_t>(columns)));
        }
    };
    for (char c : text) {
        if (c == '\n') {
            flush_wrapped(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) {
        flush_wrapped(current);
    }
    return lines;
}

std::string page_content_stream(const std::vector<std::string>& lines, const PdfLayout& layout) {
    std::ostringstream os;
    os << "BT\n";
    os << "/F1 " << layout.font_size << " Tf\n";
    os << layout.leading << " TL\n";
    os << layout.margin_left << " " << layout.first_baseline << " Td\n";
    bool first = true;
    for (const std::string& line : lines) {
        if (!first) {
            os << "T*\n";
        }
        os << "(" << escape_pdf_text(line) << ") Tj\n";
        first = false;
    }
    os << "ET\n";
    return os.str();
}

} // namespace

std::string render_pdf(const std::string& text, const PdfLayout& layout) {
    const auto lines = wrap_lines(text, layout.wrap_columns);
    std::vector<std::vector<std::string>> pages;
    for (std::size_t pos = 0; pos < lines.size(); pos += static_cast<std::size_t>(layout.lines_per_page)) {
        const std::size_t end =
            std::min(lines.size(), pos + static_cast<std::size_t>(layout.lines_per_page));
        pages.emplace_back(lines.begin() + static_cast<std::ptrdiff_t>(pos),
                           lines.begin() + static_cast<std::ptrdiff_t>(end));
    }
    if (pages.empty()) {
        pages.emplace_back();  // a document always has at least one (blank) page
    }

    const std::size_t n_pages = pages.size();
    const std::size_t n_objects = 3 + 2 * n_pages;

    std::string out = "%PDF-1.4\n";
    std::vector<std::size_t> offsets(n_objects + 1, 0);

    auto begin_object = [&](std::size_t number) {
        offsets[number] = out.size();
        out += std::to_string(number) + " 0 obj\n";
    };

    begin_object(1);
    out += "<< /Type /Catalog /Pages 2 0 R >>\nendobj\n";

    begin_object(2);
    out += "<< /Type /Pages /Kids [";
    for (std::size_t p = 0; p < n_pages; ++p) {
        if (p > 0) {
            out += " ";
        }
        out += std::to_string(4 + 2 * p) + " 0 R";
    }
    out += "] /Count " + std::to_string(n_pages) + " >>\nendobj\n";

    begin_object(3);
    out += "<< /Type /Font /Subtype /Type1 /BaseFont /Courier >>\nendobj\n";

    for (std::size_t p = 0; p < n_pages; ++p) {
        const std::size_t page_number = 4 + 2 * p;
        const std::size_t content_number = page_number + 1;

        begin_object(page_number);
        out += "<< /Type /Page /Parent 2 0 R /MediaBox [0 0 " +
               std::to_string(layout.page_width) + " " + std::to_string(layout.page_height) +
               "] /Resources << /Font << /F1 3 0 R >> >> /Contents " +
               std::to_string(content_number) + " 0 R >>\nendobj\n";

        const std::string stream = page_content_stream(pages[p], layout);
        begin_object(content_number);
        out += "<< /Length " + std::to_string(stream.size()) + " >>\nstream\n";
        out += stream;
        out += "endstream\nendobj\n";
    }

    const std::size_t xref_offset = out.size();
    out += "xref\n0 " + std::to_string(n_objects + 1) + "\n";
    out += "0000000000 65535 f \n";
    for (std::size_t i = 1; i <= n_objects; ++i) {
        char entry[32];
        std::snprintf(entry, sizeof(entry), "%010zu 00000 n \n", offsets[i]);
        out += entry;
    }
    out += "trailer\n<< /Size " + std::to_string(n_objects + 1) + " /Root 1 0 R >>\n";
    out += "startxref\n" + std::to_string(xref_offset) + "\n%%EOF\n";
    return out;
}

void export_pdf(const std::string& text, const std::string& path, const PdfLayout& layout) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write PDF to '" + path + "'");
    }
    const std::string bytes = render_pdf(text, layout);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw std::runtime_error("I/O failure while writing '" + path + "'");
    }
}

} // namespace momentum::report
