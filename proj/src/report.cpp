#include "zgm/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "zgm/errors.hpp"
#include "zgm/stats.hpp"

namespace zgm {
namespace {

using ordered_json = nlohmann::ordered_json;

// JSON carries the same 12 significant digits the TSV shows.
double round_sig(double v) {
  return std::strtod(format_sig(v).c_str(), nullptr);
}

ordered_json json_opt(const std::optional<double>& v) {
  if (v) {
    return round_sig(*v);
  }
  return nullptr;
}

std::string tsv_opt(const std::optional<double>& v, const char* marker) {
  return v ? format_sig(*v) : std::string(marker);
}

}  // namespace

std::string format_sig(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string epsilon_label(double eps) { return format_sig(eps); }

ComputeReport compute_report(const Dataset& d,
                             const std::vector<Epsilon>& epsilons,
                             const SolverConfig& cfg) {
  if (epsilons.empty()) {
    throw EmptyInput("need at least one epsilon");
  }
  ComputeReport r;
  const auto& values = d.values();
  SplitView s = split(d);
  r.count = d.size();
  r.zero_count = s.zero_count;
  r.arithmetic_mean = arithmetic_mean(values);
  // The standard geometric mean of a set containing a zero is zero.
  r.geometric_mean = s.zero_count == 0 ? geometric_mean(values) : 0.0;
  if (!s.positives.empty()) {
    r.geometric_mean_positive = geometric_mean(s.positives);
    r.geometric_sd_positive = geometric_sd(s.positives);
    r.epsilon_threshold = unboundedness_threshold(s.positives);
  }
  r.habib_mean = habib_mean(s);
  r.plus_one_mean = plus_one_mean(d);

  double first = values.front();
  r.all_equal = true;
  for (double v : values) {
    if (v != first) {
      r.all_equal = false;
      break;
    }
  }

  for (Epsilon eps : epsilons) {
    ExtendedMeanResult m = extended_geometric_mean(d, eps, cfg);
    EpsilonBlock block{eps.value(), m.delta, m.mean, m.unbounded,
                       m.trivial_case, std::nullopt};
    if (m.delta && !r.all_equal) {
      block.extended_gsd = modified_gsd(values, *m.delta, m.mean);
    }
    r.blocks.push_back(block);
  }
  return r;
}

std::string to_tsv(const ComputeReport& r) {
  std::ostringstream out;
  out << "n\t" << r.count << "\n";
  out << "zeros\t" << r.zero_count << "\n";
  out << "all_equal\t" << (r.all_equal ? "true" : "false") << "\n";
  out << "arithmetic_mean\t" << format_sig(r.arithmetic_mean) << "\n";
  out << "geometric_mean\t" << format_sig(r.geometric_mean) << "\n";
  out << "geometric_mean_positive\t"
      << tsv_opt(r.geometric_mean_positive, "undefined") << "\n";
  out << "geometric_sd_positive\t"
      << tsv_opt(r.geometric_sd_positive, "undefined") << "\n";
  out << "epsilon_threshold\t" << tsv_opt(r.epsilon_threshold, "undefined")
      << "\n";
  out << "habib_mean\t" << format_sig(r.habib_mean) << "\n";
  out << "plus_one_mean\t" << format_sig(r.plus_one_mean) << "\n";
  for (const auto& b : r.blocks) {
    std::string tag = "[" + epsilon_label(b.epsilon) + "]";
    out << "delta" << tag << "\t" << tsv_opt(b.delta, "unbounded") << "\n";
    out << "extended_mean" << tag << "\t" << format_sig(b.extended_mean)
        << "\n";
    out << "extended_gsd" << tag << "\t" << tsv_opt(b.extended_gsd, "undefined")
        << "\n";
    out << "unbounded" << tag << "\t" << (b.unbounded ? "true" : "false")
        << "\n";
    out << "trivial" << tag << "\t" << (b.trivial_case ? "true" : "false")
        << "\n";
  }
  return out.str();
}

std::string to_json(const ComputeReport& r) {
  ordered_json j;
  j["n"] = r.count;
  j["zeros"] = r.zero_count;
  j["all_equal"] = r.all_equal;
  j["arithmetic_mean"] = round_sig(r.arithmetic_mean);
  j["geometric_mean"] = round_sig(r.geometric_mean);
  j["geometric_mean_positive"] = json_opt(r.geometric_mean_positive);
  j["geometric_sd_positive"] = json_opt(r.geometric_sd_positive);
  j["epsilon_threshold"] = json_opt(r.epsilon_threshold);
  j["habib_mean"] = round_sig(r.habib_mean);
  j["plus_one_mean"] = round_sig(r.plus_one_mean);
  j["epsilons"] = ordered_json::array();
  for (const auto& b : r.blocks) {
    ordered_json jb;
    jb["epsilon"] = round_sig(b.epsilon);
    jb["delta"] = json_opt(b.delta);
    jb["extended_mean"] = round_sig(b.extended_mean);
    jb["extended_gsd"] = json_opt(b.extended_gsd);
    jb["unbounded"] = b.unbounded;
    jb["trivial"] = b.trivial_case;
    j["epsilons"].push_back(jb);
  }
  return j.dump(2) + "\n";
}

std::string to_tsv(const SweepTable& t) {
  std::ostringstream out;
  for (std::size_t e = 0; e < t.epsilons.size(); ++e) {
    out << "# delta[" << epsilon_label(t.epsilons[e].value()) << "]\t"
        << tsv_opt(t.delta[e], "unbounded") << "\n";
  }
  out << "zeros_added\thabib\tplus_one";
  for (const auto& eps : t.epsilons) {
    out << "\textended[" << epsilon_label(eps.value()) << "]";
  }
  out << "\tgsd_extended\n";
  for (const auto& row : t.rows) {
    out << row.zeros_added << "\t" << format_sig(row.habib) << "\t"
        << format_sig(row.plus_one);
    for (double m : row.extended) {
      out << "\t" << format_sig(m);
    }
    out << "\t" << tsv_opt(row.gsd_extended, "undefined") << "\n";
  }
  return out.str();
}

std::string to_json(const SweepTable& t) {
  ordered_json j;
  j["epsilons"] = ordered_json::array();
  for (const auto& eps : t.epsilons) {
    j["epsilons"].push_back(round_sig(eps.value()));
  }
  j["delta"] = ordered_json::array();
  for (const auto& d : t.delta) {
    j["delta"].push_back(json_opt(d));
  }
  j["rows"] = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json jr;
    jr["zeros_added"] = row.zeros_added;
    jr["habib"] = round_sig(row.habib);
    jr["plus_one"] = round_sig(row.plus_one);
    jr["extended"] = ordered_json::array();
    for (double m : row.extended) {
      jr["extended"].push_back(round_sig(m));
    }
    jr["gsd_extended"] = json_opt(row.gsd_extended);
    j["rows"].push_back(jr);
  }
  return j.dump(2) + "\n";
}

std::string to_tsv(const ComparisonReport& r) {
  std::ostringstream out;
  out << "# epsilon\t" << epsilon_label(r.epsilon.value()) << "\n";
  out << "# delta_min\t" << tsv_opt(r.delta_min, "unbounded") << "\n";
  out << "label\tdelta\tunified_mean\town_mean\ttrivial\n";
  for (const auto& row : r.per_dataset) {
    out << row.label << "\t" << tsv_opt(row.delta, "unbounded") << "\t"
        << format_sig(row.unified_mean) << "\t" << format_sig(row.own_mean)
        << "\t" << (row.trivial_case ? "true" : "false") << "\n";
  }
  return out.str();
}

std::string to_json(const ComparisonReport& r) {
  ordered_json j;
  j["epsilon"] = round_sig(r.epsilon.value());
  j["delta_min"] = json_opt(r.delta_min);
  j["datasets"] = ordered_json::array();
  for (const auto& row : r.per_dataset) {
    ordered_json jr;
    jr["label"] = row.label;
    jr["delta"] = json_opt(row.delta);
    jr["unified_mean"] = round_sig(row.unified_mean);
    jr["own_mean"] = round_sig(row.own_mean);
    jr["trivial"] = row.trivial_case;
    j["datasets"].push_back(jr);
  }
  return j.dump(2) + "\n";
}

}  // namespace zgm
