#pragma once

#include <string>

#include "grs/engine.hpp"

namespace grs {

/// Canonical print order inside contexts and residues: by atom text, then
/// positive before negative. Record order is discovery order.
std::string render_context(const AtomTable& atoms, const Context& c);
std::string render_record(const AtomTable& atoms, const SuccessRecord& r);
/// `F`, `T({a, -b}) v ...`, or `[in]({...}) v ...` for abductive records.
std::string render_normal_form(const AtomTable& atoms, const NormalForm& nf);
/// One line per step: `#<n> <rule> <literal> | disjuncts=<k>`.
std::string render_trace(const AtomTable& atoms, const Trace& t);

}  // namespace grs
