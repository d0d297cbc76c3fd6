#include "hankelfold/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hankelfold/hankel.hpp"
#include "hankelfold/morphic.hpp"
#include "hankelfold/oeis.hpp"
#include "hankelfold/recur.hpp"
#include "hankelfold/seqcore.hpp"
#include "hankelfold/series.hpp"
#include "hankelfold/verify.hpp"

namespace hankelfold::cli {

namespace {

// Thrown by subcommand handlers for argument combinations CLI11 cannot see.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void emit_values(std::ostream& out, const std::vector<BigInt>& values, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Plain:
      for (const auto& v : values) out << v.get_str() << '\n';
      break;
    case OutputFormat::Csv:
      for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i].get_str();
      out << '\n';
      break;
    case OutputFormat::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& v : values) arr.push_back(v.get_str());
      out << arr.dump() << '\n';
      break;
    }
  }
}

std::string plain_line(const Report& r) {
  std::ostringstream os;
  os << (r.passed() ? "PASS " : "FAIL ") << r.check_id << " [" << r.lo << "," << r.hi << "]";
  if (r.counterexample) {
    os << " n=" << r.counterexample->n << " expected=" << r.counterexample->expected
       << " actual=" << r.counterexample->actual;
  }
  if (!r.note.empty()) os << " (" << r.note << ")";
  return os.str();
}

std::vector<BigInt> fast_profile(series::Named name, std::size_t n_max) {
  std::vector<BigInt> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    switch (name) {
      case series::Named::BMinus: out.emplace_back(static_cast<long>(recur::h_fast(recur::Variant::Minus, n).value())); break;
      case series::Named::BPlus: out.emplace_back(static_cast<long>(recur::h_fast(recur::Variant::Plus, n).value())); break;
      case series::Named::TMinus: out.emplace_back(recur::g_fast(recur::Variant::Minus, n)); break;
      case series::Named::TPlus: out.emplace_back(recur::g_fast(recur::Variant::Plus, n)); break;
      default: throw UsageError("engine 'fast' supports only Bminus, Bplus, Tminus, Tplus");
    }
  }
  return out;
}

struct SeqArgs {
  std::string name;
  Index from = 0;
  Index to = 0;
};

struct HankelArgs {
  std::string series;
  std::size_t n_max = 0;
  std::string engine = "oracle";
};

struct VerifyArgs {
  std::string id;
  std::optional<Index> n_max;
  std::uint64_t seed = verify::kDefaultSeed;
  std::string profile = "quick";
  bool plain_requested = false;
};

struct MorphicArgs {
  std::size_t len = 1;
  std::string mode = "decorate";
};

struct OeisArgs {
  std::string id;
  std::string local;
  Index n_max = 0;
  bool offline = false;
  std::string cache_dir;
};

struct KernelArgs {
  std::string name;
  unsigned levels = 4;
  std::size_t length = 256;
};

int cmd_seq(const SeqArgs& a, OutputFormat fmt, std::ostream& out) {
  if (!seqcore::is_sequence_name(a.name)) throw UsageError("unknown sequence '" + a.name + "'");
  if (a.from > a.to) throw UsageError("need from <= to");
  emit_values(out, seqcore::window(a.name, a.from, a.to).values, fmt);
  return kExitOk;
}

int cmd_hankel(const HankelArgs& a, OutputFormat fmt, std::ostream& out, std::ostream& err) {
  series::Named name;
  try {
    name = series::parse_named(a.series);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.engine == "fast") {
    const auto values = fast_profile(name, a.n_max);
    if (fmt == OutputFormat::Csv) {
      hankel::HankelProfile p{std::string(series::name_of(name)), hankel::Source::Recurrence, values};
      out << p.to_csv();
    } else {
      emit_values(out, values, fmt);
    }
    return kExitOk;
  }
  std::optional<std::vector<BigInt>> fast;
  if (a.engine == "both") fast = fast_profile(name, a.n_max);
  const auto f = series::build_named(name, std::max<std::size_t>(1, 2 * a.n_max));
  const auto profile = hankel::hankel_profile(f, a.n_max, std::string(series::name_of(name)));
  if (fmt == OutputFormat::Csv) {
    out << profile.to_csv();
  } else {
    emit_values(out, profile.values, fmt);
  }
  if (fast) {
    for (std::size_t n = 0; n <= a.n_max; ++n) {
      if ((*fast)[n] != profile.values[n]) {
        err << "mismatch at n=" << n << ": oracle " << profile.values[n].get_str() << ", fast "
            << (*fast)[n].get_str() << '\n';
        return kExitMismatch;
      }
    }
    err << "engines agree on 0.." << a.n_max << '\n';
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, OutputFormat fmt, std::ostream& out) {
  std::vector<Report> reports;
  if (a.id == "all") {
    verify::Profile profile;
    try {
      profile = verify::parse_profile(a.profile);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    reports = verify::run_all(profile, a.seed);
  } else {
    const verify::CheckInfo* info = nullptr;
    try {
      info = &verify::check_info(a.id);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const Index n_max = a.n_max ? *a.n_max
                                : (a.profile == "full" ? info->full_n_max : info->quick_n_max);
    reports.push_back(verify::run_check(a.id, n_max, a.seed));
  }
  bool all_passed = true;
  for (const auto& r : reports) all_passed = all_passed && r.passed();
  if (fmt == OutputFormat::Json) {
    if (reports.size() == 1 && a.id != "all") {
      out << to_json(reports.front()).dump() << '\n';
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << arr.dump() << '\n';
    }
  } else if (fmt == OutputFormat::Csv) {
    out << "check_id,lo,hi,passed,n,expected,actual,duration_ms\n";
    for (const auto& r : reports) {
      out << r.check_id << ',' << r.lo << ',' << r.hi << ',' << (r.passed() ? "true" : "false") << ',';
      if (r.counterexample) {
        out << r.counterexample->n << ',' << r.counterexample->expected << ',' << r.counterexample->actual;
      } else {
        out << ",,";
      }
      out << ',' << r.duration_ms << '\n';
    }
  } else {
    for (const auto& r : reports) out << plain_line(r) << '\n';
  }
  return all_passed ? kExitOk : kExitMismatch;
}

int cmd_morphic(const MorphicArgs& a, std::ostream& out) {
  if (a.len < 1) throw UsageError("len must be >= 1");
  if (a.mode == "decorate") {
    out << morphic::decorated_d_prefix(a.len).to_string() << '\n';
    return kExitOk;
  }
  if (a.mode == "fixed") {
    out << morphic::fixed_point_prefix(morphic::morphism_f(), 0, a.len).to_string() << '\n';
    return kExitOk;
  }
  if (a.mode == "diff") {
    const Report r = verify::run_check("Morphic", a.len);
    if (r.passed()) {
      out << "identical\n";
      return kExitOk;
    }
    out << "first difference at n=" << r.counterexample->n << ": d(n+1)=" << r.counterexample->expected
        << ", g(f^inf(0))=" << r.counterexample->actual << '\n';
    return kExitMismatch;
  }
  throw UsageError("unknown mode '" + a.mode + "'");
}

int cmd_words(unsigned k, std::ostream& out) {
  const auto w = morphic::perturbed_words(k);
  out << "X " << w.x.to_string() << "\nU " << w.u.to_string() << "\nV " << w.v.to_string() << "\nA "
      << w.a.to_string() << "\nB " << w.b.to_string() << '\n';
  return kExitOk;
}

morphic::SequenceAccessor accessor_for(const std::string& name) {
  if (name == "gminus") return [](Index n) -> std::int64_t { return recur::g_fast(recur::Variant::Minus, n); };
  if (name == "gplus") return [](Index n) -> std::int64_t { return recur::g_fast(recur::Variant::Plus, n); };
  if (name == "hminus") return [](Index n) { return recur::h_fast(recur::Variant::Minus, n).value(); };
  if (name == "hplus") return [](Index n) { return recur::h_fast(recur::Variant::Plus, n).value(); };
  if (!seqcore::is_sequence_name(name)) throw UsageError("unknown sequence '" + name + "'");
  return [name](Index n) { return seqcore::window(name, n, n).values.front().get_si(); };
}

int cmd_kernel(const KernelArgs& a, OutputFormat fmt, std::ostream& out) {
  const auto k = morphic::kernel_explore(accessor_for(a.name), 2, a.levels, a.length);
  if (fmt == OutputFormat::Json) {
    out << k.to_json().dump() << '\n';
  } else {
    out << "level,classes_at_level,cumulative\n";
    for (const auto& l : k.levels) out << l.level << ',' << l.classes_at_level << ',' << l.cumulative << '\n';
    if (fmt == OutputFormat::Plain) {
      out << (k.stabilized_at ? "stabilized at level " + std::to_string(*k.stabilized_at)
                              : std::string("no stabilization observed"))
          << '\n';
    }
  }
  return kExitOk;
}

int cmd_oeis(const OeisArgs& a, std::ostream& out) {
  if (!oeis::is_valid_id(a.id)) throw UsageError("invalid OEIS id '" + a.id + "'");
  if (!seqcore::is_sequence_name(a.local)) throw UsageError("unknown sequence '" + a.local + "'");
  oeis::FetchOptions opts;
  opts.offline = a.offline;
  opts.fixture_dir = oeis::bundled_fixture_dir();
  if (!a.cache_dir.empty()) opts.cache_dir = a.cache_dir;
  const auto b = oeis::fetch(a.id, opts);
  const Index offset = a.id == "A034947" ? static_cast<Index>(oeis::validate_a034947(b))
                                         : static_cast<Index>(std::max<std::int64_t>(0, b.first_index()));
  const std::string local = a.local;
  const Report r = oeis::cross_check(
      b, [&local](Index n) { return seqcore::window(local, n, n).values.front(); }, offset, a.n_max);
  out << to_json(r).dump() << '\n';
  return r.passed() ? kExitOk : kExitMismatch;
}

}  // namespace

OutputFormat parse_format(std::string_view s) {
  if (s == "plain") return OutputFormat::Plain;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format: " + std::string(s));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Paperfolding Hankel determinants: sequences, oracles and verification"};
  app.name("hankelfold");
  app.require_subcommand(1);

  std::string format = "plain";
  const auto add_format = [&format](CLI::App* sub) {
    return sub->add_option("--format", format, "plain, csv or json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
  };

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "Print a window of a sequence");
  seq_cmd->add_option("name", seq.name, "j, s, a, b, d, runs, tm, odious, evil, psi")->required();
  seq_cmd->add_option("from", seq.from)->required();
  seq_cmd->add_option("to", seq.to)->required();
  add_format(seq_cmd);

  HankelArgs hk;
  auto* hk_cmd = app.add_subcommand("hankel", "Hankel determinants H_0..H_n_max of a named series");
  hk_cmd->add_option("series", hk.series, "Bminus, Bplus, B0, Tminus, Tplus, G")->required();
  hk_cmd->add_option("n_max", hk.n_max)->required();
  hk_cmd->add_option("--engine", hk.engine, "oracle, fast or both")
      ->check(CLI::IsMember({"oracle", "fast", "both"}));
  add_format(hk_cmd);

  VerifyArgs vf;
  auto* vf_cmd = app.add_subcommand("verify", "Run a verification check, or all of them");
  vf_cmd->add_option("id", vf.id, "check id or 'all'");
  vf_cmd->add_option("--n-max", vf.n_max, "range bound (per-check meaning)");
  vf_cmd->add_option("--seed", vf.seed, "seed for randomized checks");
  vf_cmd->add_option("--profile", vf.profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  auto* vf_format = add_format(vf_cmd);
  vf_cmd->add_flag("--list", "list check ids and exit");

  MorphicArgs mo;
  auto* mo_cmd = app.add_subcommand("morphic", "g(f^inf(0)) prefixes");
  mo_cmd->add_option("len", mo.len)->required();
  mo_cmd->add_option("--mode", mo.mode, "decorate, fixed or diff")
      ->check(CLI::IsMember({"decorate", "fixed", "diff"}));

  unsigned words_k = 0;
  auto* words_cmd = app.add_subcommand("words", "Perturbed-symmetry words X, U, V, A, B at level k");
  words_cmd->add_option("k", words_k)->required()->check(CLI::Range(0u, morphic::kMaxPerturbedLevel));

  KernelArgs kn;
  auto* kn_cmd = app.add_subcommand("kernel", "2-kernel fingerprint exploration");
  kn_cmd->add_option("name", kn.name, "a seq name, or gminus, gplus, hminus, hplus")->required();
  kn_cmd->add_option("--levels", kn.levels)->check(CLI::Range(0u, 12u));
  kn_cmd->add_option("--length", kn.length)->check(CLI::Range(std::size_t{1}, std::size_t{1} << 16));
  add_format(kn_cmd);

  OeisArgs oe;
  auto* oe_cmd = app.add_subcommand("oeis", "Cross-check a local sequence against an OEIS b-file");
  oe_cmd->add_option("id", oe.id)->required();
  oe_cmd->add_option("local", oe.local)->required();
  oe_cmd->add_option("n_max", oe.n_max)->required();
  oe_cmd->add_flag("--offline", oe.offline, "never touch the network");
  oe_cmd->add_option("--cache-dir", oe.cache_dir, "overrides $HANKELFOLD_CACHE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    const OutputFormat fmt = parse_format(format);
    if (seq_cmd->parsed()) return cmd_seq(seq, fmt, out);
    if (hk_cmd->parsed()) return cmd_hankel(hk, fmt, out, err);
    if (vf_cmd->parsed()) {
      if (vf_cmd->count("--list") > 0) {
        for (const auto& c : verify::checks()) out << c.id << "\t" << c.description << '\n';
        return kExitOk;
      }
      if (vf.id.empty()) throw UsageError("verify needs a check id or 'all'");
      // Reports are JSON unless a format was asked for.
      return cmd_verify(vf, vf_format->count() > 0 ? fmt : OutputFormat::Json, out);
    }
    if (mo_cmd->parsed()) return cmd_morphic(mo, out);
    if (words_cmd->parsed()) return cmd_words(words_k, out);
    if (kn_cmd->parsed()) return cmd_kernel(kn, fmt, out);
    if (oe_cmd->parsed()) return cmd_oeis(oe, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const oeis::FetchError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const oeis::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const oeis::ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace hankelfold::cli
