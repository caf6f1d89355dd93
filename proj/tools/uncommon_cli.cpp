// Command-line driver: loads a scene, simulates the mosaic pass, segments the
// H/S/I planes and writes every intermediate map plus the re-acquired chips.

#include "uncommon/pipeline.hpp"

#include <cstdio>
#include <iostream>

int main(int argc, char **argv) {
  using namespace uncommon;
  const std::vector<std::string> args(argv + 1, argv + argc);

  RunConfig cfg;
  try {
    cfg = parse_config(args);
  } catch (const HelpRequested &help) {
    std::cout << help.what();
    return 0;
  } catch (const ConfigError &e) {
    std::cerr << "config: " << e.what() << "\n";
    return 1;
  }

  try {
    const RunReport report = run_pipeline(cfg);
    std::cout << "mosaic " << report.mosaic_w << "x" << report.mosaic_h << ", " << report.points.size()
              << " interest point(s)\n";
    for (const ReportedPoint &p : report.points)
      std::cout << "  #" << p.point.rank << " at (" << p.point.x << "," << p.point.y << ") score " << p.point.score
                << " -> chip_" << p.point.rank << ".ppm\n";
    for (const StageTiming &t : report.timings)
      std::fprintf(stderr, "%-9s %8.3f ms\n", t.stage.c_str(), t.seconds * 1e3);
    return 0;
  } catch (const PipelineError &e) {
    std::cerr << e.what() << "\n";
    return e.exit_code();
  }
}
