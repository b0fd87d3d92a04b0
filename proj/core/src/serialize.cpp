#include "eigendeg/serialize.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace eigendeg {

namespace {

// Numbers are assembled by hand rather than through a JSON library so the
// digit count is fixed.
class JsonWriter {
 public:
  JsonWriter& begin_object() { return open('{'); }
  JsonWriter& end_object() { return close('}'); }
  JsonWriter& begin_array() { return open('['); }
  JsonWriter& end_array() { return close(']'); }

  JsonWriter& key(std::string_view k) {
    separator();
    string_literal(k);
    out_ << ':';
    after_key_ = true;
    return *this;
  }

  JsonWriter& value(std::string_view s) {
    separator();
    string_literal(s);
    return *this;
  }
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& value(bool b) {
    separator();
    out_ << (b ? "true" : "false");
    return *this;
  }
  JsonWriter& value(std::int64_t i) {
    separator();
    out_ << i;
    return *this;
  }
  JsonWriter& value(int i) { return value(static_cast<std::int64_t>(i)); }
  JsonWriter& value(std::uint64_t u) {
    separator();
    out_ << u;
    return *this;
  }
  JsonWriter& value(double d) {
    separator();
    if (std::isfinite(d)) {
      out_ << format_number(d, 17);
    } else {
      string_literal(format_number(d));
    }
    return *this;
  }
  JsonWriter& null() {
    separator();
    out_ << "null";
    return *this;
  }

  std::string str() const { return out_.str(); }

 private:
  JsonWriter& open(char c) {
    separator();
    out_ << c;
    first_ = true;
    return *this;
  }
  JsonWriter& close(char c) {
    out_ << c;
    first_ = false;
    return *this;
  }
  void separator() {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    if (!first_) out_ << ',';
    first_ = false;
  }
  void string_literal(std::string_view s) {
    out_ << '"';
    for (char c : s) {
      switch (c) {
        case '"':
          out_ << "\\\"";
          break;
        case '\\':
          out_ << "\\\\";
          break;
        case '\n':
          out_ << "\\n";
          break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            static constexpr char kHex[] = "0123456789abcdef";
            out_ << "\\u00" << kHex[(c >> 4) & 0xF] << kHex[c & 0xF];
          } else {
            out_ << c;
          }
      }
    }
    out_ << '"';
  }

  std::ostringstream out_;
  bool first_ = true;
  bool after_key_ = false;
};

void write_spectrum(JsonWriter& w, const Spectrum& s) {
  w.begin_object();
  w.key("order").value(to_string(s.ordering));
  w.key("values").begin_array();
  for (double v : s.values) w.value(v);
  w.end_array();
  w.key("residual").value(s.residual);
  w.end_object();
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_number(double value, int digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "+inf" : "-inf";
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

std::string json_string(std::string_view text) {
  JsonWriter w;
  w.value(text);
  return w.str();
}

std::string to_json(const Spectrum& spectrum) {
  JsonWriter w;
  write_spectrum(w, spectrum);
  return w.str();
}

std::string to_json(const BoundSet& set) {
  JsonWriter w;
  w.begin_object();
  w.key("graph").value(set.graph_id);
  w.key("n").value(set.n);
  w.key("m").value(set.m);
  w.key("tol").value(set.tol);
  w.key("checks").begin_array();
  for (const CheckOutcome& o : set.outcomes) {
    w.begin_object();
    w.key("name").value(o.name());
    w.key("holds").value(o.holds);
    w.key("worst_slack").value(o.worst_slack);
    if (o.witness_k) {
      w.key("witness_k").value(*o.witness_k);
    } else {
      w.key("witness_k").null();
    }
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

std::string to_json(const TrendReport& report) {
  JsonWriter w;
  w.begin_object();
  w.key("spec").begin_object();
  w.key("kind").value(to_string(report.spec.kind));
  if (report.spec.kind == FamilyKind::kGnp) {
    w.key("p").value(report.spec.p);
    w.key("seed").value(report.spec.seed);
  }
  w.key("grid").begin_array();
  for (int n : report.spec.grid) w.value(n);
  w.end_array();
  w.key("tol").value(report.spec.tol);
  w.end_object();

  w.key("thresholds").begin_object();
  w.key("tau").value(report.thresholds.tau);
  w.key("rho").value(report.thresholds.rho);
  w.key("decay_floor").value(kDecayFloor);
  w.end_object();

  w.key("points").begin_array();
  for (const TrendPoint& pt : report.points) {
    w.begin_object();
    w.key("n").value(pt.n);
    w.key("m").value(pt.m);
    w.key("t1").value(pt.t1);
    w.key("t2").value(pt.t2);
    w.key("t3").value(pt.t3);
    w.key("c1").value(pt.c1);
    w.key("c2").value(pt.c2);
    w.key("c3").value(pt.c3);
    w.key("s_norm").value(pt.s_norm);
    w.end_object();
  }
  w.end_array();

  w.key("verdicts").begin_object();
  for (const ConditionVerdict& v : report.verdicts) {
    w.key(to_string(v.condition)).value(to_string(v.verdict));
  }
  w.end_object();
  w.key("decay_ratios").begin_object();
  for (const ConditionVerdict& v : report.verdicts) {
    w.key(to_string(v.condition)).value(v.decay_ratio);
  }
  w.end_object();
  w.key("final_values").begin_object();
  for (const ConditionVerdict& v : report.verdicts) {
    w.key(to_string(v.condition)).value(v.final_value);
  }
  w.end_object();

  w.key("warnings").begin_array();
  for (const std::string& s : report.warnings) w.value(s);
  w.end_array();
  w.end_object();
  return w.str();
}

std::string bound_csv_header() {
  return "graph,n,m,check,holds,worst_slack,witness_k\n";
}

std::string to_csv_rows(const BoundSet& set) {
  std::string out;
  for (const CheckOutcome& o : set.outcomes) {
    out += csv_field(set.graph_id);
    out += ',' + std::to_string(set.n);
    out += ',' + std::to_string(set.m);
    out += ',';
    out += o.name();
    out += o.holds ? ",true," : ",false,";
    out += format_number(o.worst_slack);
    out += ',';
    if (o.witness_k) out += std::to_string(*o.witness_k);
    out += '\n';
  }
  return out;
}

std::string to_csv(const TrendReport& report) {
  std::string out = "n,m,t1,t2,t3,c1,c2,c3,s_norm\n";
  for (const TrendPoint& pt : report.points) {
    out += std::to_string(pt.n) + ',' + std::to_string(pt.m);
    for (double v : {pt.t1, pt.t2, pt.t3, pt.c1, pt.c2, pt.c3, pt.s_norm}) {
      out += ',';
      out += format_number(v);
    }
    out += '\n';
  }
  return out;
}

}  // namespace eigendeg
