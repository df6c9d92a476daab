#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "operad/opoly.hpp"

namespace operad {

// Built-in presentations, addressed as "lie", "com", ... or parametrised as
// "tcom:3:1", "nlie:2:0".
presentation preset(const std::string& name, const order_spec& os);

std::vector<std::string> preset_names();

struct known_dims_entry {
  std::vector<std::optional<long>> dims;  // 1-based arities, index 0 = arity 1
  std::string provenance;
};

known_dims_entry known_dims(const std::string& name);
std::vector<std::string> known_dims_names();

// The Bremner-Madariaga relation corpus for the Veronese square of pre-Lie:
// one weight-1 and three weight-2 relations on [x,y,z]_1 = (xy)z and
// [x,y,z]_2 = x(yz), expanded inside the pre-Lie presentation.
std::vector<opoly> bremner_madariaga_prelie(const presentation& prelie, const order_spec& os);

// The defining expansion of a triple-system preset's generators inside its
// binary source: for each generator of `ts`, an opoly of the source.
std::vector<opoly> triple_system_embedding(const presentation& ts, const presentation& source,
                                           const order_spec& os);

class groebner_data;

// Pushes the triple-system preset's weight-2 relations through the defining
// embedding and compares their span with the computed quadratic Veronese
// relations of the source at the given arity.
bool triple_system_span_matches(const presentation& ts, const groebner_data& source_gb, int d,
                                int arity, const order_spec& os);

// Evaluates every relation of the triple-system preset inside the source
// operad; true when all reduce to zero.
bool triple_system_relations_vanish(const presentation& ts, const groebner_data& source_gb,
                                    const order_spec& os);

}  // namespace operad
