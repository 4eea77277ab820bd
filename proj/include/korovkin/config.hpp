#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace korovkin {

class config_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Declarative experiment description parsed from a flat key = value file.
/// Lists are comma separated, '#' starts a comment. See README for the key
/// reference.
struct ExperimentConfig {
  // domain: interval <lo> <hi> <count> | circle <count> | box <xlo> <xhi>
  //         <ylo> <yhi> <nx> <ny>
  std::string domain_kind = "interval";
  std::array<double, 2> interval_bounds{0.0, 1.0};
  int grid_size = 257;
  std::array<std::array<double, 2>, 2> box_bounds{{{0.0, 1.0}, {0.0, 1.0}}};
  std::array<int, 2> box_sizes{33, 33};

  std::string family; // sup_bernstein | kantorovich | max_kantorovich |
                      // choquet_kantorovich | weyl | cesaro:<tag>
  std::string phi = "identity";          // identity | poly:[c0,c1,..] | expr:<src>
  std::string distortion = "sqrt";       // identity | sqrt | power:<p> | expr:<src>
  std::string limit = "composition";     // identity | composition | circle_mean
                                         // | expr:<src>
  std::vector<int> schedule;
  std::vector<std::string> probes;
  std::string norm = "sup"; // sup | l1
  double tol = 5e-2;
  double hyp_tol = 1e-8;
  double axiom_tol = 1e-8;
  std::uint64_t seed = 42;
  // test-set shift for interval/box runs; for family=weyl this key carries
  // the rotation angle in radians, or the word "golden"
  std::optional<std::string> alpha;
  std::string gate = "auto"; // auto | trig (force the circle-mean gate)
  int refinement = 2;  // window-sup sample density multiplier
  int resolution = 256; // choquet samples per window

  std::vector<std::pair<std::string, std::string>> raw; // echo of the file
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

} // namespace korovkin
