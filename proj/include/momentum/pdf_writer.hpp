#pragma once

#include <string>

namespace momentum::report {

// Minimal from-scratch PDF 1.4 writer: catalog, page tree, one base-14 font,
// per-page positioned-text content streams, and a byte-accurate xref table.
// Page geometry is fixed (612x792 pt, 54 lines/page, 90-column wrap) so the
// output is bit-exact for identical input text.
struct PdfLayout {
    int page_width = 612;
    int page_height = 792;
    int lines_per_page = 54;
    int wrap_columns = 90;
    int margin_left = 54;
    int first_baseline = 756;
    int leading = 14;
    int font_size = 10;
};

// Wraps `text` at the layout's column width and paginates by its line budget.
std::string render_pdf(const std::string& text, const PdfLayout& layout = PdfLayout{});

void export_pdf(const std::string& text, const std::string& path,
                const PdfLayout& layout = PdfLayout{});

} // namespace momentum::report
