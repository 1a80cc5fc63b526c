#pragma once

#include <string>

#include "artin/fc.hpp"

namespace artin {

/* Nested bracketed form: a leaf prints its Garside normal form, a split
   prints "(c0 | L:r1 | R:r2 | ...)" where L marks a block in the factor
   without s and R one in the factor without t.  fc_parse(fc, m, fc_str(w))
   reproduces w structurally. */
std::string fc_str(const FcWordPtr& w);
FcWordPtr fc_parse(const FcContext& fc, Mask m, const std::string& text);

std::string json_escape(const std::string& s);

}  // namespace artin
