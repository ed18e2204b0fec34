// SPDX-License-Identifier: Apache-2.0
#include "wzeta/certificate_io.hpp"

#include <fstream>
#include <sstream>

namespace wzeta {

namespace {

void emit_terms(std::ostringstream& out, const char* tag, const Poly2& p) {
  for (const auto& [e, c] : p.terms()) out << tag << ' ' << e.first << ' ' << e.second << ' ' << to_string(c) << '\n';
}

}  // namespace

std::string format_certificate(const Certificate& cert, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "source " << (cert.source.empty() ? "unnamed" : cert.source) << '\n';
  emit_terms(out, "num", cert.R.numerator());
  emit_terms(out, "den", cert.R.denominator());
  out << "end\n";
  return out.str();
}

Certificate parse_certificate(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::string source;
  Poly2 num;
  Poly2 den;
  bool ended = false;
  int line_no = 0;
  auto fail = [&line_no](const std::string& why) {
    throw ParseError("certificate line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (ended) fail("content after 'end'");
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "source") {
      fields >> source;
    } else if (tag == "num" || tag == "den") {
      int i = -1;
      int j = -1;
      std::string coeff;
      if (!(fields >> i >> j >> coeff) || i < 0 || j < 0) fail("expected '<tag> <deg_n> <deg_k> <rational>'");
      const Poly2 term = Poly2::monomial(i, j, parse_rational(coeff));
      (tag == "num" ? num : den) += term;
    } else if (tag == "end") {
      ended = true;
    } else {
      fail("unknown tag '" + tag + "'");
    }
  }
  if (!ended) throw ParseError("certificate: missing 'end'");
  if (den.is_zero()) throw ParseError("certificate: empty denominator");
  return Certificate{source, RationalFunction2(num, den)};
}

Certificate read_certificate_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open certificate file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_certificate(buf.str());
}

void write_certificate_file(const std::filesystem::path& path, const Certificate& cert, std::string_view comment) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write certificate file " + path.string());
  out << format_certificate(cert, comment);
}

}  // namespace wzeta
