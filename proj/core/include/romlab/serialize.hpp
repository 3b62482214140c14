#pragma once

#include <string>

#include "romlab/criterion.hpp"
#include "romlab/integrate.hpp"
#include "romlab/scan.hpp"
#include "romlab/sumset.hpp"

namespace romlab {

/// JSON report emission/parsing. Every report carries a schema_version
/// field; exact rationals serialize as "num/den" strings (never floats);
/// enclosure endpoints additionally carry lossless hex-float fields so
/// parse(emit(x)) == x bit for bit. Emission is deterministic (fixed key
/// order), which is what makes exact-mode outputs byte-reproducible.
std::string to_json(const SumsetResult& r);
std::string to_json(const FnProfile& r);
std::string to_json(const PairSumResult& r);
std::string to_json(const RearrangementCheck& r);
std::string to_json(const BoundCheck& r);
std::string to_json(const ScanReport& r);
std::string to_json(const McEstimate& r);

SumsetResult sumset_from_json(const std::string& text);
FnProfile fn_from_json(const std::string& text);
PairSumResult pair_sum_from_json(const std::string& text);
RearrangementCheck rearrangement_from_json(const std::string& text);
BoundCheck bound_check_from_json(const std::string& text);
ScanReport scan_from_json(const std::string& text);
McEstimate mc_from_json(const std::string& text);

/// CSV rendering (header row, LF endings, UTF-8). Stable columns:
///   scan:      y_num,y_den,fn_value,rho
///   integrate: lo,hi,bound,holds,piece_count
///   sumset:    n,count,density,r1,r2,cs_lower
///   fn per-d:  d,max_count,argmax_residue
std::string to_csv(const ScanReport& r);
std::string to_csv(const BoundCheck& r);
std::string to_csv(const SumsetResult& r);
std::string to_csv(const FnProfile& r);

/// Ladder variants: one row per N, same columns as the single-row forms.
std::string to_csv(const std::vector<SumsetResult>& ladder);
std::string to_json(const std::vector<SumsetResult>& ladder);

}  // namespace romlab
