#pragma once

#include <string>

#include <json.hpp>

#include "pmra/analysis.hpp"
#include "pmra/cosets.hpp"
#include "pmra/filterbank.hpp"
#include "pmra/frames.hpp"
#include "pmra/kclass.hpp"
#include "pmra/unimodular.hpp"

namespace pmra {

using Json = nlohmann::ordered_json;

/// Renders with insertion-ordered keys, two-space indent, and doubles
/// formatted as %.17g, so identical values give identical bytes. Non-finite
/// doubles render as null.
std::string canonical_json(const Json& j);

/// Writes text to the path, or to stdout when the path is empty.
void write_output(const std::string& text, const std::string& path);

Json matrix_to_json(const IMat& m);
IMat matrix_from_json(const Json& j);
Json ivec_to_json(const IVec& v);
IVec ivec_from_json(const Json& j);

Json spec_to_json(const DilationSpec& spec);
DilationSpec spec_from_json(const Json& j);

Json coset_table_to_json(const CosetTable& table);
std::string coset_table_to_csv(const CosetTable& table);

Json kclass_to_json(const KClass& k);
Json completion_to_json(const UnimodularCompletion& u);

Json filter_bank_to_json(const FilterBank& fb);
Json filter_report_to_json(const FilterVerifyReport& rep);

Json section_to_json(const Section& s);
Section section_from_json(const Json& j);

Json lattice_result_to_json(const LatticeSumResult& res);
std::string grid_values_to_csv(const TorusGrid& grid, const std::vector<cplx>& values);

Json xi_report_to_json(const XiReport& rep);
Json refine_report_to_json(const RefineReport& rep);
Json unit_norm_report_to_json(const UnitNormReport& rep);
Json reconstruction_report_to_json(const ReconstructionReport& rep);
Json gram_report_to_json(const GramLevelReport& rep);
Json frame_manifest_to_json(const FrameSet& fs);

} // namespace pmra
