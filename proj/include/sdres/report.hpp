#pragma once

#include <string>
#include <string_view>

#include "sdres/pipeline.hpp"

namespace sdres {

enum class Format { Text, Json };

// Text mirrors the usual presentation (matrices, delta notation); Json is
// byte-stable for a fixed seed and omits timing and empty sections.
std::string serialize(const PipelineReport& report, Format format);

// Inverse of serialize(report, Format::Json) on every serialized field.
// Throws InvalidArgument on malformed input.
PipelineReport deserialize(std::string_view json);

// "-δu00*δ^2u01*...": one resultant term per line when `per_line`.
std::string format_resultant(const MultiPoly& p, bool per_line = false);

}  // namespace sdres
