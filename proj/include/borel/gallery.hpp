#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "borel/codim3.hpp"
#include "borel/io.hpp"
#include "borel/koszul.hpp"
#include "borel/lefschetz.hpp"

// Regression fixtures: ideal files whose `expect:` lines state facts that
// must hold. Supported lines:
//
//   expect: strongly-stable true|false
//   expect: generators 15
//   expect: wlp|slp|ssp true|false        (criterion and oracle both)
//   expect: witness wlp|slp|ssp (1,0,1)   (tuple reported by the criterion)
//   expect: r1 2
//   expect: t 6
//   expect: hilbert 1,3,3,1
//   expect: f () 2                        (f_{k+1} at a k-tuple)
//   expect: J 2 4                         (|J_2| = 4)
//   expect: gin x1^2, x1*x2, x2^3
//   expect: same-betti-as other.ideal
//   expect: differs-from other.ideal
//
// Non-monomial ideals are replaced by their gin before any check but `gin`.
// Criteria, r1 and the f-index always read gin(I); oracles read I itself.

namespace borel {

struct CheckResult {
  std::string expectation;
  bool passed = false;
  std::string detail;
};

struct GalleryCase {
  std::filesystem::path path;
  std::string name;
  std::vector<CheckResult> checks;
  std::optional<std::string> error;

  bool passed() const {
    return !error && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline IdealFile load_ideal_file(const std::filesystem::path& p) { return parse_ideal(read_file(p)); }

/// The monomial ideal the checks run on: the ideal itself when its
/// generators are monomials, otherwise its gin.
inline MonomialIdeal working_ideal(const IdealFile& f, const GinOptions& options) {
  bool monomial = std::all_of(f.generators.begin(), f.generators.end(),
                              [](const Polynomial& p) { return p.is_zero() || p.is_monomial(); });
  if (monomial) return monomial_ideal(f);
  return gin(f.generators, f.num_vars(), options);
}

namespace detail {

inline std::optional<bool> parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  return std::nullopt;
}

inline ExponentTuple parse_tuple(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') fail(ErrorKind::InvalidArgument, "bad tuple " + s);
  ExponentTuple out;
  std::string inner = s.substr(1, s.size() - 2);
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

inline std::optional<Property> parse_property(const std::string& s) {
  if (s == "wlp") return Property::WLP;
  if (s == "slp") return Property::SLP;
  if (s == "ssp") return Property::SSP;
  return std::nullopt;
}

}  // namespace detail

/// Evaluates one `expect:` line against an ideal file.
inline CheckResult check_expectation(const std::string& line, const IdealFile& file, const std::filesystem::path& dir,
                                     const GinOptions& options) {
  CheckResult r{line, false, ""};
  std::istringstream in(line);
  std::string key, arg;
  in >> key;
  std::getline(in, arg);
  arg = std::string(detail::trim(arg));

  auto boolean = [&](bool actual) {
    auto want = detail::parse_bool(arg);
    if (!want) fail(ErrorKind::InvalidArgument, "expected true or false in '" + line + "'");
    r.passed = actual == *want;
    r.detail = actual ? "true" : "false";
  };
  auto integer = [&](std::int64_t actual) {
    r.passed = std::to_string(actual) == arg;
    r.detail = std::to_string(actual);
  };

  if (key == "gin") {
    MonomialIdeal got = gin(file.generators, file.num_vars(), options);
    IdealFile expected_file = file;
    expected_file.generators = parse_polynomials(arg, file.names);
    MonomialIdeal want = monomial_ideal(expected_file);
    r.passed = got == want;
    r.detail = to_string(got, file.names);
    return r;
  }

  const MonomialIdeal I = working_ideal(file, options);
  // Numerical invariants are read off gin(I).
  auto gin_of = [&] { return is_strongly_stable(I) ? I : gin(to_polynomials(I), I.num_vars(), options); };
  if (key == "strongly-stable") {
    boolean(is_strongly_stable(I));
  } else if (key == "generators") {
    integer(static_cast<std::int64_t>(I.generators().size()));
  } else if (auto p = detail::parse_property(key)) {
    auto criterion = analyze(I, *p, Method::Criterion, options);
    auto oracle = analyze(I, *p, Method::Oracle, options);
    if (criterion.verdict != oracle.verdict) {
      r.detail = "criterion and oracle disagree";
      return r;
    }
    boolean(criterion.verdict);
  } else if (key == "witness") {
    std::istringstream a(arg);
    std::string prop, tuple;
    a >> prop >> tuple;
    auto p = detail::parse_property(prop);
    if (!p) fail(ErrorKind::InvalidArgument, "unknown property in '" + line + "'");
    ExponentTuple want = detail::parse_tuple(tuple);
    auto rep = analyze(I, *p, Method::Criterion, options);
    for (const auto& w : rep.witnesses) {
      r.detail += to_string(w.tuple) + " has " + std::to_string(w.lhs) + ", needs " + std::to_string(w.required) + "; ";
      if (w.tuple == want) r.passed = true;
    }
  } else if (key == "r1") {
    integer(reduction_number(gin_of(), 1));
  } else if (key == "t") {
    integer(hilbert_function(I).socle_degree());
  } else if (key == "hilbert") {
    std::string got;
    const HilbertFunction H = hilbert_function(I);
    for (auto v : H.values()) got += (got.empty() ? "" : ",") + std::to_string(v);
    std::string want = arg;
    want.erase(std::remove(want.begin(), want.end(), ' '), want.end());
    r.passed = got == want;
    r.detail = got;
  } else if (key == "f") {
    auto space = arg.rfind(' ');
    if (space == std::string::npos) fail(ErrorKind::InvalidArgument, "expected 'f (tuple) value'");
    ExponentTuple alpha = detail::parse_tuple(std::string(detail::trim(arg.substr(0, space))));
    auto got = f_index(gin_of()).find(alpha);
    r.detail = got ? std::to_string(*got) : "undefined";
    r.passed = r.detail == std::string(detail::trim(arg.substr(space + 1)));
  } else if (key == "J") {
    std::istringstream a(arg);
    std::size_t i = 0;
    std::int64_t want = 0;
    a >> i >> want;
    auto got = static_cast<std::int64_t>(f_index(gin_of()).J(i).size());
    r.passed = got == want;
    r.detail = std::to_string(got);
  } else if (key == "same-betti-as" || key == "differs-from") {
    const MonomialIdeal other = working_ideal(load_ideal_file(dir / arg), options);
    if (key == "same-betti-as") {
      r.passed = ek_betti(I) == ek_betti(other);
      r.detail = r.passed ? "equal tables" : "tables differ";
    } else {
      r.passed = !(I == other);
      r.detail = r.passed ? "ideals differ" : "ideals are equal";
    }
  } else {
    fail(ErrorKind::InvalidArgument, "unknown expectation '" + key + "'");
  }
  return r;
}

inline GalleryCase run_gallery_case(const std::filesystem::path& path, const GinOptions& options = {}) {
  GalleryCase c;
  c.path = path;
  c.name = path.stem().string();
  try {
    IdealFile f = load_ideal_file(path);
    if (f.name) c.name = *f.name;
    if (f.expectations.empty()) c.error = "no expectations";
    for (const auto& e : f.expectations) c.checks.push_back(check_expectation(e, f, path.parent_path(), options));
  } catch (const Error& e) {
    c.error = std::string(to_string(e.kind())) + ": " + e.what();
  }
  return c;
}

/// All `*.ideal` files of a directory, in name order.
inline std::vector<GalleryCase> run_gallery(const std::filesystem::path& dir, const GinOptions& options = {}) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".ideal") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<GalleryCase> out;
  for (const auto& p : files) out.push_back(run_gallery_case(p, options));
  return out;
}

}  // namespace borel
