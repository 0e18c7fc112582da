#pragma once

// Straight-loop reference implementations of the parallel kernels. Kept
// independent of detail/scan.hpp so tests and benchmarks can compare them.

#include <cstdint>

#include "rackwork/euler.hpp"
#include "rackwork/structure.hpp"

namespace rackwork::serial {

AxiomReport check_rack_axioms(const Structure& s, const ReportOptions& opt = {});
AxiomReport check_weak_rack_axioms(const Structure& s, const ReportOptions& opt = {});
AxiomReport check_exp_homomorphism(const Structure& s, Element a, const ReportOptions& opt = {});
AxiomReport check_qybe(const PairMap& f, const ReportOptions& opt = {});
AxiomReport check_mixed(const PairMap& a, const PairMap& b, const ReportOptions& opt = {});
std::uint64_t count_racks(std::size_t n);

}  // namespace rackwork::serial
