#include "artin/serialize.hpp"

#include <cstdio>

namespace artin {

std::string fc_str(const FcWordPtr& w) {
  if (w->node->leaf) return artin_str(*w->leafval);
  std::string out = "(";
  out += fc_str(w->c0);
  for (const FcSyllable& s : w->syl) {
    out += " | ";
    out += (s.side == 0 ? "L:" : "R:");
    out += fc_str(s.w);
  }
  out += ")";
  return out;
}

namespace {

// split on " | " at parenthesis depth zero
std::vector<std::string> split_top(const std::string& body) {
  std::vector<std::string> parts;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      --depth;
      if (depth < 0) throw Error("unbalanced parentheses in form literal");
    } else if (depth == 0 && c == ' ' && i + 2 < body.size() && body[i + 1] == '|' &&
               body[i + 2] == ' ') {
      parts.push_back(body.substr(start, i - start));
      start = i + 3;
      i += 2;
    }
  }
  if (depth != 0) throw Error("unbalanced parentheses in form literal");
  parts.push_back(body.substr(start));
  return parts;
}

FcWordPtr parse_node(const FcContext& fc, const FcNode* n, const std::string& s) {
  if (n->leaf) {
    auto w = std::make_shared<FcWord>();
    w->node = n;
    w->leafval = parse_artin(*n->gar, s);
    return w;
  }
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw Error("expected a bracketed form: " + s);
  std::vector<std::string> parts = split_top(s.substr(1, s.size() - 2));
  auto w = std::make_shared<FcWord>();
  w->node = n;
  w->c0 = parse_node(fc, n->znode, parts[0]);
  for (size_t i = 1; i < parts.size(); ++i) {
    const std::string& p = parts[i];
    if (p.size() < 2 || (p[0] != 'L' && p[0] != 'R') || p[1] != ':')
      throw Error("expected L: or R: block: " + p);
    int side = p[0] == 'L' ? 0 : 1;
    if (!w->syl.empty() && w->syl.back().side == side)
      throw Error("blocks do not alternate in form literal");
    FcWordPtr r = parse_node(fc, n->factor(side), p.substr(2));
    if (fc_try_into(r, n->zmask).has_value())
      throw Error("block lies in the edge subgroup: " + p);
    w->syl.push_back({side, r});
  }
  return w;
}

}  // namespace

FcWordPtr fc_parse(const FcContext& fc, Mask m, const std::string& text) {
  return parse_node(fc, fc.node(m), text);
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
        break;
    }
  }
  return out;
}

}  // namespace artin
