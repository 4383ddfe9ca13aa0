#include "dfm/field_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "dfm/errors.hpp"

namespace dfm {

namespace {

constexpr double kGroupTol = 1e-10;

std::optional<FieldKind> kind_from_keyword(const std::string& word) {
  for (FieldKind k : {FieldKind::AlgebraOneForm, FieldKind::AlgebraTwoForm, FieldKind::GroupValued,
                      FieldKind::ScalarDoublet, FieldKind::MomentumField}) {
    if (word == kind_name(k)) return k;
  }
  return std::nullopt;
}

// Positions (within the stored site block) of the serialized components.
std::vector<int> serialized_slots(const Lattice& lat, const GroupSpec& spec, FieldKind kind) {
  const int m = lat.dim();
  const int d = spec.algebra_dim();
  std::vector<int> slots;
  switch (kind) {
    case FieldKind::AlgebraTwoForm:
    case FieldKind::MomentumField:
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
          for (int a = 0; a < d; ++a) slots.push_back((i * m + j) * d + a);
        }
      }
      break;
    case FieldKind::AlgebraOneForm:
    case FieldKind::GroupValued:
    case FieldKind::ScalarDoublet:
      for (int c = 0; c < component_count(lat, spec, kind); ++c) slots.push_back(c);
      break;
    default:
      throw SpecMismatch(std::string("GFLD has no keyword for field kind ") + kind_name(kind));
  }
  return slots;
}

void append_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

bool next_line(std::istream& in, std::string& line, int& lineno) {
  if (!std::getline(in, line)) return false;
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

double parse_double(const std::string& s, int line) {
  if (s.empty()) fail(line, "empty number");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    fail(line, "invalid number '" + s + "'");
  }
  return v;
}

int parse_int(const std::string& s, int line) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || v <= 0 || v > 1 << 20) {
    fail(line, "invalid size '" + s + "'");
  }
  return static_cast<int>(v);
}

}  // namespace

std::string serialize_field(const LatticeField& field) {
  const Lattice& lat = field.lattice();
  const std::vector<int> slots = serialized_slots(lat, field.spec(), field.kind());
  std::string out = "gfld 1\ngroup ";
  out += field.spec().name();
  out += "\nkind ";
  out += kind_name(field.kind());
  out += "\ndims " + std::to_string(lat.dim());
  for (int n : lat.sizes()) out += " " + std::to_string(n);
  out += "\nspacing";
  for (int axis = 0; axis < lat.dim(); ++axis) {
    out += ' ';
    append_number(out, lat.spacing(axis));
  }
  out += '\n';
  for (std::size_t s = 0; s < lat.site_count(); ++s) {
    auto values = field.site(s);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (k) out += ' ';
      append_number(out, values[slots[k]].real());
      out += ',';
      append_number(out, values[slots[k]].imag());
    }
    out += '\n';
  }
  return out;
}

void write_field(std::ostream& out, const LatticeField& field) { out << serialize_field(field); }

LatticeField read_field(std::istream& in) {
  std::string line;
  int lineno = 0;

  if (!next_line(in, line, lineno) || tokens(line) != std::vector<std::string>{"gfld", "1"}) {
    fail(1, "expected header 'gfld 1'");
  }

  if (!next_line(in, line, lineno)) fail(2, "missing group line");
  auto t = tokens(line);
  if (t.size() != 2 || t[0] != "group") fail(2, "expected 'group <name>'");
  const auto group = parse_group_name(t[1]);
  if (!group) fail(2, "unknown group '" + t[1] + "'");

  if (!next_line(in, line, lineno)) fail(3, "missing kind line");
  t = tokens(line);
  if (t.size() != 2 || t[0] != "kind") fail(3, "expected 'kind <name>'");
  const auto kind = kind_from_keyword(t[1]);
  if (!kind) fail(3, "unknown kind '" + t[1] + "'");

  if (!next_line(in, line, lineno)) fail(4, "missing dims line");
  t = tokens(line);
  if (t.size() < 2 || t[0] != "dims") fail(4, "expected 'dims <m> <n_1> ... <n_m>'");
  const int m = parse_int(t[1], 4);
  if (m < 2 || m > 4 || static_cast<int>(t.size()) != m + 2) fail(4, "dims must list m in [2, 4] and m sizes");
  std::vector<int> sizes;
  for (int i = 0; i < m; ++i) {
    sizes.push_back(parse_int(t[2 + i], 4));
    if (sizes.back() < 4) fail(4, "every axis needs at least 4 sites");
  }
  const Lattice lat(sizes);

  if (!next_line(in, line, lineno)) fail(5, "missing spacing line");
  t = tokens(line);
  if (static_cast<int>(t.size()) != m + 1 || t[0] != "spacing") fail(5, "expected 'spacing <h_1> ... <h_m>'");
  for (int i = 0; i < m; ++i) {
    const double h = parse_double(t[1 + i], 5);
    if (std::abs(h - lat.spacing(i)) > 1e-12 * lat.spacing(i)) {
      fail(5, "spacing " + t[1 + i] + " does not equal 2pi/" + std::to_string(sizes[i]));
    }
  }

  const GroupSpec& spec = GroupSpec::get(*group);
  LatticeField field(lat, *group, *kind);
  const std::vector<int> slots = serialized_slots(lat, spec, *kind);
  const int mm = lat.dim();
  const int d = spec.algebra_dim();
  for (std::size_t s = 0; s < lat.site_count(); ++s) {
    if (!next_line(in, line, lineno)) fail(lineno + 1, "missing site line (expected " +
                                                          std::to_string(lat.site_count()) + " sites)");
    t = tokens(line);
    if (t.size() != slots.size()) {
      fail(lineno, "expected " + std::to_string(slots.size()) + " values, found " + std::to_string(t.size()));
    }
    auto dst = field.site(s);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const auto comma = t[k].find(',');
      if (comma == std::string::npos) fail(lineno, "value '" + t[k] + "' is not a re,im pair");
      dst[slots[k]] = cd(parse_double(t[k].substr(0, comma), lineno),
                         parse_double(t[k].substr(comma + 1), lineno));
    }
    if (*kind == FieldKind::AlgebraTwoForm || *kind == FieldKind::MomentumField) {
      for (int i = 0; i < mm; ++i) {
        for (int j = i + 1; j < mm; ++j) {
          for (int a = 0; a < d; ++a) dst[(j * mm + i) * d + a] = -dst[(i * mm + j) * d + a];
        }
      }
    }
    if (*kind == FieldKind::GroupValued) {
      const double r = field.group_element(s).membership_residual();
      if (!(r <= kGroupTol)) fail(lineno, "site value is not in the group (residual " + std::to_string(r) + ")");
    }
  }
  while (next_line(in, line, lineno)) {
    if (!tokens(line).empty()) fail(lineno, "trailing data after the last site");
  }
  return field;
}

LatticeField parse_field(const std::string& text) {
  std::istringstream in(text);
  return read_field(in);
}

LatticeField load_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return read_field(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_field(const std::string& path, const LatticeField& field) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << serialize_field(field);
  if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace dfm
