#ifndef LRC_IO_HPP
#define LRC_IO_HPP

// File formats.
//
//   field     "p" or "p^k", e.g. "11", "5^2"
//   spec      {"field": "11", "subsets": ["full", [0,1,4], ...],
//              "deltas": [4,5,6], "d": 4}
//             "full" means the whole field; explicit subsets list element
//             ranks.  Subset order is the caller's; the library reorders by
//             size internally.
//   message   dimension-many whitespace-separated element ranks
//   word      length-many whitespace-separated tokens, each a rank or "?"
//             for an erased position
//   sim       {"spec": {...}, "model": "iid"|"fixed"|"line",
//              "epsilon": 0.1, "count": 3, "direction": 0,
//              "trials": 1000, "seed": 42}
//
// All indices in reports (positions, directions) are 0-based.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrc/code.hpp"
#include "lrc/errors.hpp"
#include "lrc/field.hpp"
#include "lrc/metrics.hpp"
#include "lrc/recovery.hpp"
#include "lrc/sim.hpp"

namespace lrc {

using nlohmann::json;

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw IoError(path + ": " + e.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw IoError("failed writing " + path);
}

inline FiniteField parse_field(const std::string& s) {
  const auto caret = s.find('^');
  try {
    std::size_t used = 0;
    const unsigned long p = std::stoul(s.substr(0, caret), &used);
    if (used != (caret == std::string::npos ? s.size() : caret))
      throw ValidationError("bad field spec '" + s + "'");
    unsigned long k = 1;
    if (caret != std::string::npos) {
      k = std::stoul(s.substr(caret + 1), &used);
      if (used != s.size() - caret - 1) throw ValidationError("bad field spec '" + s + "'");
    }
    return FiniteField(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
  } catch (const std::logic_error&) {
    throw ValidationError("bad field spec '" + s + "'");
  }
}

inline std::string field_to_string(const FiniteField& f) {
  std::string s = std::to_string(f.characteristic());
  if (f.degree() > 1) s += "^" + std::to_string(f.degree());
  return s;
}

inline CodeSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("spec must be a JSON object");
  for (const char* key : {"field", "subsets", "deltas", "d"})
    if (!j.contains(key)) throw ValidationError(std::string("spec is missing \"") + key + "\"");

  const FiniteField field = parse_field(j.at("field").get<std::string>());
  std::vector<std::vector<FieldElement>> subsets;
  for (const auto& sub : j.at("subsets")) {
    if (sub.is_string() && sub.get<std::string>() == "full") {
      subsets.push_back(field.elements());
    } else if (sub.is_array()) {
      std::vector<FieldElement> a;
      for (const auto& r : sub) a.push_back(field.element(r.get<std::uint32_t>()));
      subsets.push_back(std::move(a));
    } else {
      throw ValidationError("each subset must be \"full\" or an array of ranks");
    }
  }
  return CodeSpec(field, std::move(subsets), j.at("deltas").get<std::vector<int>>(),
                  j.at("d").get<int>());
}

// --- words ------------------------------------------------------------

inline std::vector<std::string> tokenize(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

inline std::uint32_t parse_rank(const std::string& tok, const FiniteField& field) {
  std::size_t used = 0;
  unsigned long r = 0;
  try {
    r = std::stoul(tok, &used);
  } catch (const std::logic_error&) {
    throw ValidationError("bad symbol '" + tok + "'");
  }
  if (used != tok.size()) throw ValidationError("bad symbol '" + tok + "'");
  if (r >= field.order()) throw ValidationError("symbol " + tok + " out of field range");
  return static_cast<std::uint32_t>(r);
}

inline std::vector<FieldElement> parse_message(const std::string& text, const CodeSpec& spec) {
  const auto toks = tokenize(text);
  if (toks.size() != spec.dimension())
    throw ValidationError("message has " + std::to_string(toks.size()) + " symbols, expected " +
                          std::to_string(spec.dimension()));
  std::vector<FieldElement> msg;
  msg.reserve(toks.size());
  for (const auto& t : toks) msg.push_back(spec.field().element(parse_rank(t, spec.field())));
  return msg;
}

inline ErasedWord parse_erased_word(const std::string& text, const CodeSpec& spec) {
  const auto toks = tokenize(text);
  if (toks.size() != spec.length())
    throw ValidationError("word has " + std::to_string(toks.size()) + " symbols, expected " +
                          std::to_string(spec.length()));
  ErasedWord w;
  w.reserve(toks.size());
  for (const auto& t : toks) {
    if (t == "?")
      w.emplace_back(std::nullopt);
    else
      w.emplace_back(spec.field().element(parse_rank(t, spec.field())));
  }
  return w;
}

inline std::string format_erased_word(const ErasedWord& w) {
  std::string out;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j) out += ' ';
    out += w[j] ? std::to_string(w[j]->rank()) : "?";
  }
  out += '\n';
  return out;
}

inline std::string format_codeword(const Codeword& w) {
  return format_erased_word(ErasedWord(w.begin(), w.end()));
}

// --- reports ----------------------------------------------------------

inline json metrics_to_json(const CodeSpec& spec, const CodeMetrics& cm) {
  json profile = json::array();
  for (const auto& p : cm.profile) profile.push_back({{"r", p.locality}, {"delta", p.delta}});
  return json{{"field", field_to_string(spec.field())},
              {"d", spec.degree_bound()},
              {"length", cm.length},
              {"dimension", cm.dimension},
              {"min_distance", cm.min_distance},
              {"availability", cm.availability},
              {"profile", profile},
              {"singleton_gap", cm.singleton_gap}};
}

inline std::string metrics_to_text(const CodeSpec& spec, const CodeMetrics& cm) {
  std::ostringstream out;
  out << "field        " << field_to_string(spec.field()) << "\n";
  out << "d            " << spec.degree_bound() << "\n";
  out << "length m     " << cm.length << "\n";
  out << "dimension    " << cm.dimension << "\n";
  out << "min distance " << cm.min_distance << "\n";
  out << "availability " << cm.availability << "\n";
  out << "profile      ";
  for (std::size_t i = 0; i < cm.profile.size(); ++i)
    out << (i ? " " : "") << "(r=" << cm.profile[i].locality
        << ", delta=" << cm.profile[i].delta << ")";
  out << "\nsingleton gap " << cm.singleton_gap << "\n";
  return out.str();
}

inline json repair_report_to_json(const RepairReport& r) {
  return json{{"complete", r.complete},
              {"passes", r.passes},
              {"repaired", r.repaired},
              {"repairs_by_direction", r.repairs_by_direction},
              {"attempts_by_direction", r.attempts_by_direction},
              {"stuck_positions", r.stuck}};
}

inline json local_report_to_json(const LocalCodeReport& r) {
  std::vector<std::uint32_t> alpha;
  for (const auto& e : r.alpha) alpha.push_back(e.rank());
  return json{{"direction", r.direction},
              {"alpha", alpha},
              {"length", r.length},
              {"dimension", r.dimension},
              {"min_distance", r.min_distance},
              {"is_mds", r.is_mds},
              {"distance_exhaustive", r.distance_exhaustive}};
}

inline SimConfig sim_config_from_json(const json& j) {
  SimConfig cfg;
  const std::string model = j.at("model").get<std::string>();
  if (model == "iid") {
    cfg.model = ErasureModel::Iid;
    cfg.epsilon = j.at("epsilon").get<double>();
  } else if (model == "fixed") {
    cfg.model = ErasureModel::FixedCount;
    cfg.count = j.at("count").get<std::size_t>();
  } else if (model == "line") {
    cfg.model = ErasureModel::LineBurst;
    cfg.direction = j.at("direction").get<std::size_t>();
  } else {
    throw ValidationError("model must be one of: iid, fixed, line");
  }
  const long long trials = j.at("trials").get<long long>();
  if (trials < 1) throw ValidationError("trials must be >= 1");
  cfg.trials = static_cast<std::size_t>(trials);
  cfg.seed = j.at("seed").get<std::uint64_t>();
  return cfg;
}

inline std::string sim_report_to_text(const SimReport& r) {
  std::ostringstream out;
  out << "trials            " << r.trials << "\n";
  out << "full repair rate  " << r.full_repair_rate() << "\n";
  out << "mean residual     " << r.mean_residual_erasures() << "\n";
  out << "mean passes       " << r.mean_peeling_passes() << "\n";
  out << "repairs by dir    ";
  for (std::size_t i = 0; i < r.repairs_by_direction.size(); ++i)
    out << (i ? " " : "") << r.repairs_by_direction[i];
  out << "\n";
  return out.str();
}

inline json sim_report_to_json(const SimReport& r) {
  return json{{"trials", r.trials},
              {"full_repairs", r.full_repairs},
              {"full_repair_rate", r.full_repair_rate()},
              {"mean_residual_erasures", r.mean_residual_erasures()},
              {"mean_peeling_passes", r.mean_peeling_passes()},
              {"repairs_by_direction", r.repairs_by_direction}};
}

/// Generator matrix as CSV of ranks, one row per basis monomial.
inline std::string generator_matrix_csv(const CodeSpec& spec) {
  const Matrix& g = spec.generator_matrix();
  std::string out;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (c) out += ',';
      out += std::to_string(g.at(r, c).rank());
    }
    out += '\n';
  }
  return out;
}

}  // namespace lrc

#endif  // LRC_IO_HPP
