#include "momentum/runner.hpp"

#include <filesystem>
#include <fstream>

#include "momentum/engine.hpp"
#include "momentum/pdf_writer.hpp"
#include "momentum/reporter.hpp"

namespace momentum::sim {

nlohmann::ordered_json write_run_outputs(const RunConfig& cfg, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    WorldState world = new_run(cfg);

    const fs::path events_path = fs::path(out_dir) / "events.jsonl";
    std::ofstream events_file(events_path, std::ios::binary);
    if (!events_file) {
        throw std::runtime_error("cannot write '" + events_path.string() + "'");
    }
    const RunResult result = run_to_completion(
        world, [&](const SimEvent& e) { events_file << event_to_line(e) << "\n"; });
    events_file.close();
    if (!events_file) {
        throw std::runtime_error("I/O failure while writing '" + events_path.string() + "'");
    }

    {
        std::ofstream summary_file(fs::path(out_dir) / "summary.json", std::ios::binary);
        summary_file << result.summary.dump(2) << "\n";
    }
    report::export_json(world.reports, (fs::path(out_dir) / "reports.json").string());
    const std::string text = report::render_text(world.reports);
    {
        std::ofstream text_file(fs::path(out_dir) / "report.txt", std::ios::binary);
        text_file << text;
    }
    report::export_pdf(text, (fs::path(out_dir) / "report.pdf").string());
    return result.summary;
}

} // namespace momentum::sim
