#pragma once

#include <string>
#include <vector>

#include "neighsum/existence.hpp"
#include "neighsum/generators.hpp"
#include "neighsum/grid.hpp"
#include "neighsum/linalg.hpp"

namespace neighsum {

// Board JSON: {"dims":[...],"cells":[...]} with cells nested row-major and
// every integer encoded as a decimal string (arbitrary precision).
std::string board_to_json(const IntGrid& grid);
IntGrid board_from_json(const std::string& text);

// CSV: plain decimal integers, one board row per line. 2-D boards only.
std::string board_to_csv(const IntGrid& grid);
IntGrid board_from_csv(const std::string& text);

// {"dim":k,"vectors":[["<decimal-int>",...],...]}
std::string kernel_to_json(const KernelBasis& basis);

// {"exists":bool,"rule":"...","certificate":[ints]|null}
std::string verdict_to_json(const ExistenceVerdict& verdict);

std::string count_to_json(const CountRecord& record);
std::string counts_to_json(const std::vector<CountRecord>& records);

std::string violations_to_json(const std::vector<Violation>& violations);

std::string rational_solutions_to_json(const std::vector<RationalSolution>& solutions);

// Sequence files: one decimal integer per line (blank lines ignored).
std::vector<Int> read_sequence_file(const std::string& path);

// Cross files: four sections headed [a], [b], [c], [d]; each following line
// is "<signed nonzero index> <decimal integer>".
CrossSpec read_cross_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace neighsum
