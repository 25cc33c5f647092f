// Command-line front end: classification, factorization, enumeration,
// length-set invariants, witness construction and batch atlas generation,
// all with machine-readable output.
//
// Exit codes: 0 success, 2 parse/usage error, 3 domain error, 4 budget
// exceeded, 5 I/O error.

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sifactor/integer_ring.hpp"
#include "sifactor/lengths.hpp"
#include "sifactor/poly_ring.hpp"

using nlohmann::json;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RingOptions {
  std::string kind = "z";
  std::uint32_t characteristic = 0;
};

template <typename Fn>
void with_ring(const RingOptions& opt, Fn&& fn) {
  if (opt.kind == "z") {
    fn(sif::IntegerRing{});
    return;
  }
  if (opt.characteristic == 0)
    throw sif::ParseError("--char is required for --ring fp");
  try {
    fn(sif::PolyModRing(opt.characteristic));
  } catch (const std::domain_error& e) {
    // a bad characteristic is a usage error
    if (std::string(e.what()).find("characteristic") != std::string::npos)
      throw sif::ParseError(e.what());
    throw;
  }
}

template <sif::EffectivePid R>
json si_json(const R& D, const sif::SIElement<R>& x) {
  return {{"a", D.to_string(x.a)}, {"b", D.to_string(x.b)}};
}

json lengths_json(const sif::LengthSet& s) {
  return json(s.values());
}

json family_json(const std::optional<sif::FamilyDescriptor>& f) {
  if (!f) return nullptr;
  return {{"clause", sif::to_string(f->clause)}, {"m", f->m}, {"n", f->n}};
}

std::string family_csv(const std::optional<sif::FamilyDescriptor>& f) {
  if (!f) return "none";
  switch (f->clause) {
    case sif::FamilyClause::Singleton0:
    case sif::FamilyClause::Singleton1:
      return sif::to_string(f->clause);
    default:
      return std::string(sif::to_string(f->clause)) + "(" + std::to_string(f->m) +
             "," + std::to_string(f->n) + ")";
  }
}

// Caps exhaustive enumeration at desk scale.
constexpr std::uint64_t kMaxQuotient = 1u << 16;
constexpr long kMaxTotalExponent = 24;

template <sif::EffectivePid R>
void enumeration_guard(const R& D, const sif::SIElement<R>& x) {
  auto c = sif::classify(D, x);
  const auto& body = (c == sif::Classification::ZeroDivisorNonunit) ? x.b : x.a;
  auto pf = D.factor(body);
  if (pf.total_exponent() > kMaxTotalExponent)
    throw sif::BudgetError("enumeration budget exceeded: norm exponent too large");
  for (const auto& f : pf.factors) {
    auto q = D.quotient_size(D.pow(f.prime, f.exponent));
    if (!q || *q > kMaxQuotient)
      throw sif::BudgetError("enumeration budget exceeded: residue system too large");
  }
}

template <sif::EffectivePid R>
long total_exponent_of(const R& D, const sif::SIElement<R>& x) {
  auto c = sif::classify(D, x);
  const auto& body = (c == sif::Classification::ZeroDivisorNonunit) ? x.b : x.a;
  return D.factor(body).total_exponent();
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// ---- subcommands ----

void run_classify(const RingOptions& ropt, const std::string& element) {
  with_ring(ropt, [&](const auto& D) {
    auto x = sif::si_parse(D, element);
    json out;
    out["classification"] = sif::to_string(sif::classify(D, x));
    auto kind = sif::classify_irreducible(D, x);
    out["irreducible"] = kind ? json(sif::to_string(*kind)) : json(nullptr);
    out["prime"] = sif::is_prime(D, x);
    auto lp = sif::local_profile(D, x);
    if (lp) {
      out["local_profile"] = {{"p", D.to_string(lp->prime)},
                              {"n", lp->exponent},
                              {"k", lp->val_b ? json(*lp->val_b) : json(nullptr)}};
    } else {
      out["local_profile"] = nullptr;
    }
    emit(out);
  });
}

void run_factor(const RingOptions& ropt, const std::string& element,
                const std::string& mode) {
  with_ring(ropt, [&](const auto& D) {
    auto x = sif::si_parse(D, element);
    json out;
    if (mode == "witness") {
      auto fz = sif::factor_irreducibles(D, x);
      json fs = json::array();
      for (const auto& f : fz.factors) fs.push_back(si_json(D, f));
      out = {{"target", si_json(D, x)}, {"factors", fs}, {"length", fz.length()}};
    } else if (mode == "count") {
      enumeration_guard(D, x);
      out = {{"count", sif::count_factorizations(D, x)}};
    } else {  // all
      enumeration_guard(D, x);
      auto all = sif::enumerate_factorizations(D, x);
      json list = json::array();
      for (const auto& fz : all) {
        json fs = json::array();
        for (const auto& f : fz.factors) fs.push_back(si_json(D, f));
        list.push_back({{"factors", fs}, {"length", fz.length()}});
      }
      out = {{"target", si_json(D, x)},
             {"count", all.size()},
             {"factorizations", list}};
    }
    emit(out);
  });
}

void run_invariants(const RingOptions& ropt, const std::string& element,
                    int oracle_mode /* -1 auto, 0 off, 1 on */) {
  with_ring(ropt, [&](const auto& D) {
    auto x = sif::si_parse(D, element);
    json out;
    if (sif::classify(D, x) == sif::Classification::Unit) {
      out = {{"lengths", {0}},        {"delta", json::array()},
             {"elasticity", nullptr}, {"catenary", 0},
             {"family", family_json(sif::FamilyDescriptor{sif::FamilyClause::Singleton0})},
             {"oracle_agrees", true}};
      emit(out);
      return;
    }
    auto L = sif::length_set(D, x);
    out["lengths"] = lengths_json(L);
    out["delta"] = lengths_json(sif::delta_set(D, x));
    out["elasticity"] = sif::to_string(sif::elasticity(D, x));
    out["family"] = family_json(sif::family_classify(L));
    bool oracle = oracle_mode == 1 ||
                  (oracle_mode == -1 && total_exponent_of(D, x) <= 6);
    if (oracle) {
      enumeration_guard(D, x);
      out["catenary"] = sif::catenary_degree(D, x);
      out["oracle_agrees"] = sif::length_set_oracle(D, x) == L;
    } else {
      out["catenary"] = nullptr;
      out["oracle_agrees"] = nullptr;
    }
    emit(out);
  });
}

void run_atlas(const RingOptions& ropt, const std::string& prime_text, long max_n,
               const std::string& out_path, long threads) {
  with_ring(ropt, [&](const auto& D) {
    using Ring = std::decay_t<decltype(D)>;
    auto p = D.parse(prime_text);
    if (!D.is_prime_elem(p))
      throw sif::ParseError("atlas: --prime must be a prime element");
    if (max_n < 1) throw sif::ParseError("atlas: --max-n must be positive");
    if (max_n > 12) throw sif::BudgetError("atlas: --max-n exceeds the budget");
    {
      auto q = D.quotient_size(D.pow(p, max_n));
      if (!q || *q > kMaxQuotient)
        throw sif::BudgetError("atlas: residue system too large");
    }

    // one work item per (n, b); explicit b = 0 rows close each block
    std::vector<std::pair<long, typename Ring::Elem>> items;
    for (long n = 1; n <= max_n; ++n) {
      for (const auto& b : D.residues(D.pow(p, n))) items.emplace_back(n, b);
      items.emplace_back(n, D.zero());
    }

    auto render = [&](const std::pair<long, typename Ring::Elem>& item) {
      const auto& [n, b] = item;
      sif::SIElement<Ring> x{D.pow(p, n), b};
      auto L = sif::length_set(D, x);
      auto k = D.valuation(p, b);
      std::ostringstream row;
      row << D.to_string(p) << ',' << n << ',' << D.to_string(b) << ',';
      if (k)
        row << *k;
      else
        row << "inf";
      row << ',' << L.min() << ',' << L.max() << ',';
      const auto gaps = sif::gaps_of(L).values();
      for (std::size_t i = 0; i < gaps.size(); ++i)
        row << (i ? ";" : "") << gaps[i];
      row << ',' << sif::catenary_degree(D, x) << ','
          << sif::count_factorizations(D, x) << ','
          << family_csv(sif::family_classify(L));
      return row.str();
    };

    std::vector<std::string> rows(items.size());
    if (threads <= 1) {
      for (std::size_t i = 0; i < items.size(); ++i) rows[i] = render(items[i]);
    } else {
      std::vector<std::future<void>> futs;
      std::size_t chunk = (items.size() + threads - 1) / threads;
      for (long t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk, hi = std::min(items.size(), lo + chunk);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, [&, lo, hi] {
          for (std::size_t i = lo; i < hi; ++i) rows[i] = render(items[i]);
        }));
      }
      for (auto& f : futs) f.get();
    }

    std::ostringstream body;
    body << "p,n,b,k,min_len,max_len,delta,catenary,num_factorizations,family\n";
    for (const auto& r : rows) body << r << "\n";

    if (out_path == "-") {
      std::cout << body.str();
      if (!std::cout) throw IoError("atlas: write to standard output failed");
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw IoError("atlas: cannot open " + out_path);
      out << body.str();
      out.close();
      if (!out) throw IoError("atlas: write to " + out_path + " failed");
    }
  });
}

void run_witness(const RingOptions& ropt, const std::string& family_text) {
  json spec;
  try {
    spec = json::parse(family_text);
  } catch (const json::exception& e) {
    throw sif::ParseError(std::string("witness: bad --family JSON: ") + e.what());
  }
  sif::FamilyDescriptor f;
  try {
    std::string clause = spec.at("clause").get<std::string>();
    if (clause == "singleton0")
      f.clause = sif::FamilyClause::Singleton0;
    else if (clause == "singleton1")
      f.clause = sif::FamilyClause::Singleton1;
    else if (clause == "interval")
      f.clause = sif::FamilyClause::Interval;
    else if (clause == "interval_plus_two")
      f.clause = sif::FamilyClause::IntervalPlusTwo;
    else if (clause == "arithmetic_progression")
      f.clause = sif::FamilyClause::ArithmeticProgression;
    else
      throw sif::ParseError("witness: unknown clause: " + clause);
    f.m = spec.value("m", 0);
    f.n = spec.value("n", 0);
  } catch (const json::exception& e) {
    throw sif::ParseError(std::string("witness: bad --family JSON: ") + e.what());
  }
  with_ring(ropt, [&](const auto& D) {
    auto w = sif::witness_for(D, f);
    json out = {{"element", si_json(D, w)},
                {"lengths", lengths_json(sif::length_set(D, w))},
                {"family", family_json(f)}};
    emit(out);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factorization structure of the self-idealization of a PID"};
  app.require_subcommand(1);

  RingOptions ropt;
  std::string element, mode = "witness", prime_text, out_path = "-";
  std::string family_text;
  long max_n = 4, threads = 1;
  int oracle_mode = -1;

  auto add_ring = [&](CLI::App* cmd) {
    cmd->add_option("--ring", ropt.kind, "base ring: z (integers) or fp (F_p[x])")
        ->check(CLI::IsMember({"z", "fp"}));
    cmd->add_option("--char", ropt.characteristic,
                    "characteristic for --ring fp (prime)");
  };

  auto* c_classify = app.add_subcommand("classify", "classify one element");
  add_ring(c_classify);
  c_classify->add_option("element", element, "element as \"a ; b\"")->required();

  auto* c_factor = app.add_subcommand("factor", "factor into irreducibles");
  add_ring(c_factor);
  c_factor->add_option("--mode", mode, "witness | all | count")
      ->check(CLI::IsMember({"witness", "all", "count"}));
  c_factor->add_option("element", element, "element as \"a ; b\"")->required();

  auto* c_inv = app.add_subcommand("invariants", "length-set invariants");
  add_ring(c_inv);
  auto* on = c_inv->add_flag("--oracle", "force the brute-force cross-check");
  auto* off = c_inv->add_flag("--no-oracle", "skip the brute-force cross-check");
  c_inv->add_option("element", element, "element as \"a ; b\"")->required();

  auto* c_atlas = app.add_subcommand("atlas", "sweep residues of p^n into a CSV");
  add_ring(c_atlas);
  c_atlas->add_option("--prime", prime_text, "prime element of the base ring")
      ->required();
  c_atlas->add_option("--max-n", max_n, "largest norm exponent")->required();
  c_atlas->add_option("--out", out_path, "output path, - for stdout");
  c_atlas->add_option("--threads", threads, "worker threads (output order is fixed)");

  auto* c_wit = app.add_subcommand("witness", "element realizing a length-set family");
  add_ring(c_wit);
  c_wit->add_option("--family", family_text, "descriptor JSON")->required();

  try {
    app.parse(argc, argv);
    if (on->count()) oracle_mode = 1;
    if (off->count()) oracle_mode = 0;
    if (c_classify->parsed()) run_classify(ropt, element);
    if (c_factor->parsed()) run_factor(ropt, element, mode);
    if (c_inv->parsed()) run_invariants(ropt, element, oracle_mode);
    if (c_atlas->parsed()) run_atlas(ropt, prime_text, max_n, out_path, threads);
    if (c_wit->parsed()) run_witness(ropt, family_text);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const sif::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sif::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
