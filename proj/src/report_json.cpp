#include "qbilat/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace qbilat {

using nlohmann::json;

namespace {

void write(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map keeps keys sorted
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        write(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        write(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        break;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);  // no "-0"
      out += buf;
      break;
    }
    default:
      out += j.dump();
  }
}

double number_or_nan(const json& j) {
  return j.is_number() ? j.get<double>() : std::nan("");
}

}  // namespace

std::string canonical_dump(const json& j) {
  std::string out;
  write(j, out);
  return out;
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_array() || j.size() != 2)
    throw Error(Errc::ParseError, "complex value must be a number or [re, im]");
  return {number_or_nan(j[0]), number_or_nan(j[1])};
}

json params_to_json(const ParamSet& p) {
  json j = json::object();
  j["q"] = complex_to_json(p.q);
  for (const auto& [k, v] : p.values) j[k] = complex_to_json(v);
  for (const auto& [k, v] : p.ints) j[k] = v;
  return j;
}

ParamSet params_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "parameter set must be an object");
  ParamSet p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "q") {
      p.q = complex_from_json(it.value());
    } else if (it.value().is_number_integer()) {
      p.ints[it.key()] = it.value().get<long>();
    } else {
      p.values[it.key()] = complex_from_json(it.value());
    }
  }
  return p;
}

json report_to_json(const VerificationReport& r) {
  json j;
  j["id"] = r.id;
  j["kind"] = r.kind;
  j["seed"] = r.seed;
  j["tol"] = r.tol;
  j["samples"] = {{"requested", r.requested}, {"accepted", r.accepted}, {"rejected", r.rejected}};
  j["ill_conditioned"] = r.ill_conditioned;
  j["max_rel_residual"] = r.max_rel_residual;
  j["mean_rel_residual"] = r.mean_rel_residual;
  j["worst_sample"] = params_to_json(r.worst_sample);
  j["truncation"] = {{"eps_term", r.truncation.eps_term},
                     {"max_terms_per_direction", r.truncation.max_terms_per_direction},
                     {"tail_ratio_guard", r.truncation.tail_ratio_guard}};
  j["error"] = r.error;
  j["pass"] = r.pass;
  return j;
}

VerificationReport report_from_json(const json& j) {
  try {
    VerificationReport r;
    r.id = j.at("id").get<std::string>();
    r.kind = j.value("kind", std::string());
    r.seed = j.at("seed").get<std::uint64_t>();
    r.tol = number_or_nan(j.at("tol"));
    const json& s = j.at("samples");
    r.requested = s.at("requested").get<long>();
    r.accepted = s.at("accepted").get<long>();
    r.rejected = s.at("rejected").get<long>();
    r.ill_conditioned = j.value("ill_conditioned", 0L);
    // null stands for a non-finite residual
    const double inf = std::numeric_limits<double>::infinity();
    r.max_rel_residual = j.at("max_rel_residual").is_null() ? inf : number_or_nan(j["max_rel_residual"]);
    r.mean_rel_residual =
        j.at("mean_rel_residual").is_null() ? inf : number_or_nan(j["mean_rel_residual"]);
    r.worst_sample = params_from_json(j.at("worst_sample"));
    if (j.contains("truncation")) {
      const json& t = j["truncation"];
      r.truncation.eps_term = number_or_nan(t.at("eps_term"));
      r.truncation.max_terms_per_direction = t.at("max_terms_per_direction").get<long>();
      r.truncation.tail_ratio_guard = number_or_nan(t.at("tail_ratio_guard"));
    }
    r.error = j.value("error", std::string());
    r.pass = j.at("pass").get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed report: ") + e.what());
  }
}

json record_to_json(const IdentityRecord& rec) {
  json slots = json::array();
  for (const Slot& s : rec.slots) {
    json o = {{"name", s.name}, {"role", role_name(s.role)}};
    if (s.role != SlotRole::Continuous) {
      o["lo"] = s.lo;
      o["hi"] = s.hi;
    }
    if (s.real) o["real"] = true;
    if (s.positive) o["positive"] = true;
    if (s.base_like) o["base_like"] = true;
    slots.push_back(std::move(o));
  }
  json subs = json::array();
  for (const auto& sub : rec.sub_records) subs.push_back(record_to_json(sub));
  return {{"id", rec.id},          {"title", rec.title},   {"anchor", rec.anchor},
          {"slots", slots},        {"region", rec.region_text},
          {"exact", rec.exact},    {"links", rec.links},   {"sub_records", subs}};
}

}  // namespace qbilat
