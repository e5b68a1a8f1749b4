#pragma once

#include <iosfwd>
#include <optional>

#include "mrt/chartab/table.hpp"

namespace mrt::chartab {

// Character-table text format, bit-exact round trip:
//   CHARTAB <name> <order> [<prime>]
//   <classname> <order> <size> <centralizer>     (one line per class)
//   POW <p>: i1 i2 ...                           (1-based class indices)
//   CHI <name>: v1 v2 ...                        (cyclotomic literals)
void write_table(std::ostream& os, const Table& t,
                 std::optional<std::uint64_t> prime = std::nullopt);
Table read_table(std::istream& is, std::optional<std::uint64_t>* prime_out = nullptr);

// Fusion file: `FUSION <src> <dst>: j1 j2 ...` (1-based target classes)
void write_fusion(std::ostream& os, const Fusion& f);
Fusion read_fusion(std::istream& is);

}  // namespace mrt::chartab
