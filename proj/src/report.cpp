#include "ga/report.hpp"

#include <cmath>
#include <cstdio>

namespace ga {

namespace {

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

// JSON has no NaN/Inf literals; those serialize as null.
std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Streaming writer with explicit key order; callers control the schema.
class JsonWriter {
 public:
  JsonWriter& obj_begin() { pre_value(); o_ += '{'; push(true); return *this; }
  JsonWriter& obj_end() { o_ += '}'; pop(); return *this; }
  JsonWriter& arr_begin() { pre_value(); o_ += '['; push(false); return *this; }
  JsonWriter& arr_end() { o_ += ']'; pop(); return *this; }

  JsonWriter& key(std::string_view k) {
    comma();
    o_ += '"';
    o_ += json_escape(k);
    o_ += "\":";
    after_key_ = true;
    return *this;
  }

  JsonWriter& str(std::string_view s) {
    pre_value();
    o_ += '"';
    o_ += json_escape(s);
    o_ += '"';
    return *this;
  }

  JsonWriter& num(double v) { pre_value(); o_ += json_number(v); return *this; }

  JsonWriter& integer(long long v) {
    pre_value();
    o_ += std::to_string(v);
    return *this;
  }

  JsonWriter& boolean(bool v) { pre_value(); o_ += v ? "true" : "false"; return *this; }

  JsonWriter& null() { pre_value(); o_ += "null"; return *this; }

  const std::string& out() const { return o_; }

 private:
  void push(bool is_obj) { stack_.push_back(is_obj); first_.push_back(true); }
  void pop() {
    stack_.pop_back();
    first_.pop_back();
  }
  void comma() {
    if (!first_.empty() && !first_.back()) o_ += ',';
    if (!first_.empty()) first_.back() = false;
  }
  void pre_value() {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    if (!stack_.empty() && !stack_.back()) comma();  // array element
  }

  std::string o_;
  std::vector<bool> stack_;  // true = object, false = array
  std::vector<bool> first_;
  bool after_key_ = false;
};

void write_coeffs(JsonWriter& w, const std::array<double, 4>& c) {
  w.arr_begin();
  for (double v : c) w.num(v);
  w.arr_end();
}

void write_opt_coeffs(JsonWriter& w, const std::optional<std::array<double, 4>>& c) {
  if (c) {
    write_coeffs(w, *c);
  } else {
    w.null();
  }
}

Multivector from_coeffs(const std::string& algebra, const std::array<double, 4>& c) {
  const Signature sig = signature_from_name(algebra).value_or(cl20);
  return Multivector{sig, c[0], c[1], c[2], c[3]};
}

}  // namespace

std::array<double, 4> coeff_array(const Multivector& x) {
  return {x.a0, x.a1, x.a2, x.a12};
}

std::string to_json(const CliReport& r) {
  JsonWriter w;
  w.obj_begin();
  w.key("command").str(r.command);
  w.key("algebra").str(r.algebra);
  w.key("input").str(r.input);

  w.key("result").obj_begin();
  w.key("kind").str(r.kind);
  w.key("coeffs");
  write_opt_coeffs(w, r.coeffs);
  w.key("family");
  if (r.family) {
    w.str(*r.family);
  } else {
    w.null();
  }
  w.key("axis");
  write_opt_coeffs(w, r.axis);
  if (r.family_log) w.key("family_log").num(*r.family_log);
  if (r.finite_part) {
    w.key("finite_part");
    write_coeffs(w, *r.finite_part);
  }
  if (r.divergent_direction) {
    w.key("divergent_direction");
    write_coeffs(w, *r.divergent_direction);
  }
  if (!r.roots.empty()) {
    w.key("roots").arr_begin();
    for (const auto& c : r.roots) write_coeffs(w, c);
    w.arr_end();
  }
  if (!r.families.empty()) {
    w.key("families").arr_begin();
    for (const auto& f : r.families) w.str(f);
    w.arr_end();
  }
  if (!r.notes.empty()) {
    w.key("notes").arr_begin();
    for (const auto& n : r.notes) w.str(n);
    w.arr_end();
  }
  if (!r.suites.empty()) {
    w.key("suites").arr_begin();
    for (const CheckReport& s : r.suites) {
      w.obj_begin();
      w.key("suite").str(s.suite);
      w.key("algebra").str(s.algebra);
      w.key("passed").boolean(s.passed);
      w.key("samples").integer(static_cast<long long>(s.samples));
      w.key("max_residual").num(s.max_residual);
      w.key("per_sector").obj_begin();
      for (const auto& [tag, n] : s.per_sector)
        w.key(tag).integer(static_cast<long long>(n));
      w.obj_end();
      w.key("failures").arr_begin();
      for (const auto& f : s.failures) w.str(f);
      w.arr_end();
      w.obj_end();
    }
    w.arr_end();
  }
  if (r.bench) {
    w.key("bench").obj_begin();
    w.key("op").str(r.bench->op);
    w.key("samples").integer(static_cast<long long>(r.bench->samples));
    w.key("skipped").integer(static_cast<long long>(r.bench->skipped));
    w.key("terms").integer(r.bench->terms);
    w.key("rows").arr_begin();
    for (const BenchRow& row : r.bench->rows) {
      w.obj_begin();
      w.key("impl").str(row.impl);
      w.key("terms").integer(row.terms);
      w.key("ns_per_op").num(row.ns_per_op);
      w.key("max_abs_err").num(row.max_abs_err);
      w.obj_end();
    }
    w.arr_end();
    w.obj_end();
  }
  w.obj_end();  // result

  w.key("sector");
  if (r.sector) {
    w.obj_begin();
    w.key("tag").str(to_string(r.sector->tag));
    w.key("qsq").num(r.sector->norms.qsq);
    w.key("det").num(r.sector->norms.det);
    w.key("seminorm_q").num(r.sector->norms.seminorm_q);
    w.key("seminorm_b").num(r.sector->norms.seminorm_b);
    w.obj_end();
  } else {
    w.null();
  }

  w.key("residual");
  if (r.residual) {
    w.num(*r.residual);
  } else {
    w.null();
  }

  w.key("timing");
  if (r.timing.empty()) {
    w.null();
  } else {
    w.obj_begin();
    for (const auto& [name, ns] : r.timing) w.key(name).num(ns);
    w.obj_end();
  }

  w.obj_end();
  return w.out();
}

std::string to_text(const CliReport& r) {
  std::string out;
  const auto line = [&out](const std::string& s) {
    out += s;
    out += '\n';
  };

  if (r.coeffs) {
    line(to_string(from_coeffs(r.algebra, *r.coeffs)));
  } else if (r.kind != "none" && !r.bench && r.suites.empty()) {
    line(r.kind);
  }
  if (r.axis) line("axis: " + to_string(from_coeffs(r.algebra, *r.axis)));
  if (r.family) line("family: " + *r.family);
  if (r.family_log) line("family_log: " + format_double(*r.family_log));
  if (r.finite_part)
    line("finite_part: " + to_string(from_coeffs(r.algebra, *r.finite_part)));
  if (r.divergent_direction)
    line("divergent_direction: " +
         to_string(from_coeffs(r.algebra, *r.divergent_direction)));
  for (std::size_t i = 0; i < r.roots.size(); ++i)
    line("root[" + std::to_string(i) + "]: " +
         to_string(from_coeffs(r.algebra, r.roots[i])));
  for (const auto& f : r.families) line("family: " + f);
  if (r.sector)
    line("sector: " + std::string(to_string(r.sector->tag)) +
         " (qsq=" + format_double(r.sector->norms.qsq) +
         ", det=" + format_double(r.sector->norms.det) +
         ", seminorm_q=" + format_double(r.sector->norms.seminorm_q) +
         ", seminorm_b=" + format_double(r.sector->norms.seminorm_b) + ")");
  if (r.residual) line("residual: " + format_double(*r.residual));
  for (const auto& n : r.notes) line("note: " + n);
  for (const CheckReport& s : r.suites) {
    std::string head = s.suite + " " + s.algebra + ": " +
                       (s.passed ? "PASS" : "FAIL") +
                       " samples=" + std::to_string(s.samples) +
                       " max_residual=" + format_double(s.max_residual);
    line(head);
    if (!s.per_sector.empty()) {
      std::string sectors = "  sectors:";
      for (const auto& [tag, n] : s.per_sector)
        sectors += " " + tag + "=" + std::to_string(n);
      line(sectors);
    }
    for (const auto& f : s.failures) line("  counterexample: " + f);
  }
  if (r.bench) {
    out += to_csv(*r.bench);
    line("skipped: " + std::to_string(r.bench->skipped));
  }
  for (const auto& [name, ns] : r.timing)
    line("timing: " + name + "=" + format_double(ns) + " ns/op");
  return out;
}

}  // namespace ga
