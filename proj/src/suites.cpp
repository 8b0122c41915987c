#include "coxword/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "coxword/closure.hpp"
#include "coxword/error.hpp"
#include "coxword/generic_group.hpp"
#include "coxword/permutation_group.hpp"
#include "coxword/relations.hpp"
#include "coxword/type_a.hpp"
#include "coxword/word_graph.hpp"

namespace coxword {

  using nlohmann::json;

  std::string VerificationReport::to_jsonl() const {
    std::string out;
    for (auto const& r : records) {
      json j  = r.data;
      j["suite"]  = suite;
      j["system"] = system;
      j["z"]      = r.z;
      j["pass"]   = r.pass;
      out += j.dump() + "\n";
    }
    json s            = summary;
    s["suite"]        = suite;
    s["system"]       = system;
    s["summary"]      = true;
    s["pass"]         = pass;
    s["records"]      = records.size();
    s["wall_seconds"] = wall_seconds;
    out += s.dump() + "\n";
    return out;
  }

  VerificationReport VerificationReport::from_jsonl(std::string const& text) {
    VerificationReport rep;
    std::istringstream in(text);
    std::string        line;
    while (std::getline(in, line)) {
      if (line.empty()) {
        continue;
      }
      json j = json::parse(line);
      rep.suite  = j.at("suite").get<std::string>();
      rep.system = j.at("system").get<std::string>();
      if (j.value("summary", false)) {
        rep.pass         = j.at("pass").get<bool>();
        rep.wall_seconds = j.at("wall_seconds").get<double>();
        for (char const* key : {"suite", "system", "summary", "pass", "records", "wall_seconds"}) {
          j.erase(key);
        }
        rep.summary = std::move(j);
      } else {
        SuiteRecord r;
        r.z    = j.at("z").get<std::string>();
        r.pass = j.at("pass").get<bool>();
        for (char const* key : {"suite", "system", "z", "pass"}) {
          j.erase(key);
        }
        r.data = std::move(j);
        rep.records.push_back(std::move(r));
      }
    }
    return rep;
  }

  SuiteRecord const* VerificationReport::find(std::string const& z) const {
    for (auto const& r : records) {
      if (r.z == z) {
        return &r;
      }
    }
    return nullptr;
  }

  std::vector<std::string> suite_names() {
    return {"hh",        "hh-primed",      "primed-min",   "hecke",       "hecke-min",
            "hecke-prop", "cardinality",   "mtwisted",     "primed-lemma", "simply-braided",
            "sb-classify", "type-a",       "backend",      "words"};
  }

  json SpanResult::to_json() const {
    json j{{"target", target}, {"reached", reached}, {"spans", spans()}};
    if (violation) {
      j["violation"] = *violation;
    }
    return j;
  }

  SpanResult check_span(std::vector<PrimedWord> const& target, RewriteSystem const& rules,
                        std::size_t rank) {
    SpanResult res;
    res.target = target.size();
    if (target.empty()) {
      return res;
    }
    auto oracle = [&](std::span<Letter const> w) {
      return std::binary_search(target.begin(), target.end(), w,
                                [](auto const& a, auto const& b) {
                                  return std::lexicographical_compare(a.begin(), a.end(),
                                                                      b.begin(), b.end());
                                });
    };
    ClosureResult const c = equivalence_class(target.front(), rules, oracle);
    res.reached           = c.words.size();
    if (c.violation) {
      res.violation = format_word(*c.violation, rank) + " from "
                      + format_word(*c.violation_source, rank);
    }
    return res;
  }

  SpanResult check_hecke_span(InvolutionEngine const& engine, ElementId z, std::size_t bound,
                              RewriteSystem const& rules) {
    HeckeWordIndex const      index(engine, z, bound);
    RankedClosureResult const r = ranked_closure(index, rules);
    SpanResult                res;
    res.target  = r.total;
    res.reached = r.reached;
    if (r.violation) {
      res.violation = format_word(*r.violation, engine.rank()) + " from "
                      + format_word(*r.violation_source, engine.rank());
    }
    return res;
  }

  std::vector<RelationSchema> inject_fault(std::vector<RelationSchema> schemas,
                                           std::uint64_t               seed) {
    std::vector<std::size_t> droppable;
    for (std::size_t i = 0; i < schemas.size(); ++i) {
      if (schemas[i].kind != RelationKind::Braid && schemas[i].kind != RelationKind::PrimedBraid) {
        droppable.push_back(i);
      }
    }
    if (!droppable.empty()) {
      schemas.erase(schemas.begin()
                    + static_cast<std::ptrdiff_t>(droppable[seed % droppable.size()]));
    }
    return schemas;
  }

  namespace {

    struct Context {
      SystemHandle const&     h;
      SuiteOptions const&     opt;
      InvolutionEngine const& E;
      CayleyTable const&      T;
      std::size_t             rank;

      std::string format(ElementId z) const {
        return h.group->format(T.element(z));
      }

      std::vector<RelationSchema> schemas(SchemaSet set) const {
        auto s = schema_set(E, set);
        if (opt.fault_seed) {
          s = inject_fault(std::move(s), *opt.fault_seed);
        }
        return s;
      }

      RewriteSystem rules(SchemaSet set) const {
        return RewriteSystem(schemas(set));
      }

      std::size_t rho(ElementId z) const {
        return E.rho(z);
      }
    };

    std::vector<PrimedWord> as_primed(std::vector<Word> const& words) {
      return {words.begin(), words.end()};
    }

    std::vector<PrimedWord> inv_words(InvolutionEngine const& E, ElementId z) {
      auto const w = E.involution_words(z);
      return {w->begin(), w->end()};
    }

    // Runs f over the twisted involutions in parallel; records keep the
    // enumeration order.
    std::vector<SuiteRecord> for_each_z(Context const&                            ctx,
                                        std::function<SuiteRecord(ElementId)> const& f) {
      std::vector<ElementId> const zs = ctx.h.involutions();
      std::vector<SuiteRecord>     out(zs.size());
      std::atomic<std::size_t>     next{0};
      std::exception_ptr           error;
      std::mutex                   error_mutex;
      auto                         worker = [&] {
        while (true) {
          std::size_t const i = next.fetch_add(1);
          if (i >= zs.size()) {
            return;
          }
          try {
            out[i]   = f(zs[i]);
            out[i].z = ctx.format(zs[i]);
            out[i].data["length"] = ctx.T.length(zs[i]);
            out[i].data["rho"]    = ctx.rho(zs[i]);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
              error = std::current_exception();
            }
            next = zs.size();
          }
        }
      };
      std::size_t const nthreads = std::max<std::size_t>(1, std::min(ctx.opt.threads, zs.size()));
      if (nthreads == 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < nthreads; ++t) {
          pool.emplace_back(worker);
        }
        for (auto& t : pool) {
          t.join();
        }
      }
      if (error) {
        std::rethrow_exception(error);
      }
      return out;
    }

    SuiteRecord span_record(SpanResult const& r) {
      SuiteRecord rec;
      rec.pass = r.spans();
      rec.data = r.to_json();
      return rec;
    }

    std::vector<SuiteRecord> span_suite(Context const& ctx, SchemaSet set,
                                        std::function<std::vector<PrimedWord>(ElementId)> target) {
      RewriteSystem const rules = ctx.rules(set);
      return for_each_z(ctx, [&](ElementId z) {
        return span_record(check_span(target(z), rules, ctx.rank));
      });
    }

    Word alternating_ending_in(Gen s, Gen t, std::size_t n) {
      return n % 2 == 1 ? alternating(s, t, n) : alternating(t, s, n);
    }

    ElementId gen_element(CayleyTable const& T, Gen s) {
      return T.right(CayleyTable::identity(), s);
    }

    // Number of classes of atoms of z under braid and mixed half-braid
    // relations.
    std::size_t atom_class_count(Context const& ctx, ElementId z) {
      auto const          words = as_primed(ctx.E.reduced_hecke_words(z));
      RewriteSystem const rules(schema_set(ctx.E, SchemaSet::SimpleHecke));
      std::set<PrimedWord> assigned;
      std::size_t          classes = 0;
      for (auto const& w : words) {
        if (assigned.contains(w)) {
          continue;
        }
        ++classes;
        for (auto& v : equivalence_class(w, rules).words) {
          assigned.insert(std::move(v));
        }
      }
      return classes;
    }

    bool is_longest(Context const& ctx, ElementId z) {
      if (!ctx.h.finite) {
        return false;
      }
      for (std::size_t k = 0; k < ctx.rank; ++k) {
        if (!ctx.T.is_right_descent(z, static_cast<Gen>(k))) {
          return false;
        }
      }
      return true;
    }

    // m(s,t;Ad*_z) against m(s,t), and the twisted descents of z extended by
    // alternating suffixes.
    SuiteRecord mtwisted_record(Context const& ctx, ElementId z) {
      CayleyTable const&   T   = ctx.T;
      InvolutionEngine const& E = ctx.E;
      CoxeterSystem const& sys = T.system();
      SuiteRecord          rec;
      std::size_t          checks = 0;
      auto fail = [&](std::string msg) {
        if (rec.pass) {
          rec.data["failure"] = std::move(msg);
        }
        rec.pass = false;
      };
      auto in_des = [&](ElementId x, Gen g) { return T.is_right_descent(x, g); };
      Word const& r = E.involution_words(z)->front();
      for (std::size_t si = 0; si < ctx.rank; ++si) {
        for (std::size_t ti = 0; ti < ctx.rank; ++ti) {
          auto const  s  = static_cast<Gen>(si);
          auto const  t  = static_cast<Gen>(ti);
          Order const m  = sys.m(s, t);
          Order const mz = E.m_twisted_ad(z, s, t);
          ++checks;
          // m(s,t;Ad*_z) <= m(s,t), with equality checked below.
          if (mz > m) {
            fail("m(s,t;Ad) > m(s,t)");
          }
          ElementId const zs  = T.right(z, s);
          ElementId const zt  = T.right(z, t);
          ElementId const ssz = T.left(sys.star(s), z);
          ElementId const tsz = T.left(sys.star(t), z);
          bool            eq_pred;
          if (m.value() == 1 || !m.is_finite()) {
            eq_pred = true;
          } else if (m.value() == 2) {
            eq_pred = zs != tsz;
          } else {
            eq_pred = std::set{zs, zt} != std::set{ssz, tsz};
          }
          if ((mz == m) != eq_pred) {
            fail("equality condition for s=" + std::to_string(s + 1) + " t="
                 + std::to_string(t + 1));
          }
          if (s == t) {
            continue;
          }
          // First proposition, with y = z.
          std::size_t const nmax = m.is_finite() ? static_cast<std::size_t>(m.value()) + 1 : 8;
          for (std::size_t n = 1; n <= nmax; ++n) {
            if (!ctx.h.finite && ctx.rho(z) + n > ctx.h.rho_bound) {
              break;
            }
            Word w1 = r, w2 = r;
            Word a1 = alternating_ending_in(s, t, n), a2 = alternating_ending_in(t, s, n);
            w1.insert(w1.end(), a1.begin(), a1.end());
            w2.insert(w2.end(), a2.begin(), a2.end());
            ElementId const f1 = E.fold(w1);
            ElementId const f2 = E.fold(w2);
            if (f1 == kNoElement || f2 == kNoElement) {
              fail("fold left the enumerated ball");
              continue;
            }
            bool const both = f1 == f2 && E.is_involution_word(w1, f1) && E.is_involution_word(w2, f2);
            bool const pred = !in_des(z, s) && !in_des(z, t) && mz.is_finite()
                              && n == static_cast<std::size_t>(mz.value());
            ++checks;
            if (both != pred) {
              fail("alternating extension criterion at n=" + std::to_string(n));
            }
            if (both && E.m_twisted_ad(f1, s, t) != mz) {
              fail("m(s,t;Ad) changes along the extension");
            }
          }
          // Second proposition.
          if (in_des(z, s) && in_des(z, t)) {
            ++checks;
            if (!mz.is_finite()) {
              fail("infinite m(s,t;Ad) with both descents");
              continue;
            }
            auto const n     = static_cast<std::size_t>(mz.value());
            auto       strip = [&](Word const& alt) -> ElementId {
              ElementId y = z;
              for (auto it = alt.rbegin(); it != alt.rend(); ++it) {
                if (!in_des(y, *it)) {
                  return kNoElement;
                }
                y = E.underline(y, *it);
              }
              return y;
            };
            ElementId const y1 = strip(alternating_ending_in(s, t, n));
            ElementId const y2 = strip(alternating_ending_in(t, s, n));
            if (y1 == kNoElement || y1 != y2) {
              fail("no common y below z");
              continue;
            }
            if (in_des(y1, s) || in_des(y1, t) || E.m_twisted_ad(y1, s, t) != mz) {
              fail("y below z has the wrong descents or twist order");
            }
            Word w1 = E.involution_words(y1)->front();
            Word w2 = w1;
            Word a1 = alternating_ending_in(s, t, n), a2 = alternating_ending_in(t, s, n);
            w1.insert(w1.end(), a1.begin(), a1.end());
            w2.insert(w2.end(), a2.begin(), a2.end());
            if (!E.is_involution_word(w1, z) || !E.is_involution_word(w2, z)) {
              fail("extensions of a word for y are not words for z");
            }
          }
        }
      }
      rec.data["checks"] = checks;
      return rec;
    }

    SuiteRecord primed_lemma_record(Context const& ctx, ElementId z) {
      InvolutionEngine const& E   = ctx.E;
      CoxeterSystem const&    sys = ctx.T.system();
      SuiteRecord             rec;
      std::size_t             blocks = 0;
      auto const              words  = E.involution_words(z);
      for (Word const& a : *words) {
        auto const        ca = E.commutations(a, z);
        std::set<std::size_t> const cset(ca.begin(), ca.end());
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
          Gen const   s = a[i];
          Gen const   t = a[i + 1];
          Order const m = sys.m(s, t);
          if (!m.is_finite()) {
            continue;
          }
          auto const n = static_cast<std::size_t>(m.value());
          if (i + n > a.size()
              || !std::equal(a.begin() + static_cast<std::ptrdiff_t>(i),
                             a.begin() + static_cast<std::ptrdiff_t>(i + n),
                             alternating(s, t, n).begin())) {
            continue;
          }
          ++blocks;
          for (std::size_t j = i + 1; j + 1 < i + n; ++j) {
            if (cset.contains(j)) {
              rec.pass             = false;
              rec.data["failure"] = "(a) " + format_word(a, ctx.rank);
            }
          }
          if (cset.contains(i) && cset.contains(i + n - 1) && n != 2) {
            rec.pass             = false;
            rec.data["failure"] = "(b) " + format_word(a, ctx.rank);
          }
          Word b = a;
          Word const swapped = alternating(t, s, n);
          std::copy(swapped.begin(), swapped.end(), b.begin() + static_cast<std::ptrdiff_t>(i));
          std::set<std::size_t> expect;
          for (std::size_t c : cset) {
            expect.insert(c == i ? i + n - 1 : (c == i + n - 1 ? i : c));
          }
          auto const cb = E.commutations(b, z);
          if (std::set<std::size_t>(cb.begin(), cb.end()) != expect) {
            rec.pass             = false;
            rec.data["failure"] = "(c) " + format_word(a, ctx.rank);
          }
        }
      }
      rec.data["words"]  = words->size();
      rec.data["blocks"] = blocks;
      return rec;
    }

    SuiteRecord words_record(Context const& ctx, ElementId z) {
      InvolutionEngine const& E = ctx.E;
      CayleyTable const&      T = ctx.T;
      SuiteRecord             rec;
      auto fail = [&](std::string msg) {
        if (rec.pass) {
          rec.data["failure"] = std::move(msg);
        }
        rec.pass = false;
      };
      for (std::size_t k = 0; k < ctx.rank; ++k) {
        auto const      s = static_cast<Gen>(k);
        ElementId const u = E.underline(z, s);
        if (u != kNoElement && E.underline(u, s) != z) {
          fail("underline action is not involutive");
        }
        ElementId const d = T.demazure(T.demazure(gen_element(T, T.system().star(s)), z),
                                       gen_element(T, s));
        if (d != kNoElement && d != E.twist(z, s)) {
          fail("twist disagrees with the Demazure product");
        }
      }
      auto const        words = E.involution_words(z);
      std::size_t const rho   = ctx.rho(z);
      std::size_t const comm  = 2 * rho - T.length(z);
      for (Word const& w : *words) {
        auto const folds = E.prefix_folds(w);
        for (std::size_t i = 1; i < folds.size(); ++i) {
          if (T.length(folds[i]) <= T.length(folds[i - 1])) {
            fail("prefix folds of " + format_word(w, ctx.rank) + " not increasing");
          }
        }
        if (w.size() != rho || folds.back() != z) {
          fail("word " + format_word(w, ctx.rank) + " has the wrong length or fold");
        }
        if (E.commutations(w, z).size() != comm) {
          fail("commutation count of " + format_word(w, ctx.rank));
        }
      }
      auto const hred = E.reduced_hecke_words(z);
      if (!std::includes(hred.begin(), hred.end(), words->begin(), words->end())) {
        fail("reduced Hecke words miss an involution word");
      }
      auto const atoms = E.hecke_atoms(z);
      std::size_t const min_len = T.length(*std::min_element(
          atoms.begin(), atoms.end(), [&](ElementId a, ElementId b) { return T.length(a) < T.length(b); }));
      std::vector<Word> minimal_words;
      for (ElementId w : atoms) {
        if (T.length(w) == min_len) {
          auto const r = E.reduced_words(w);
          minimal_words.insert(minimal_words.end(), r.begin(), r.end());
        }
      }
      std::sort(minimal_words.begin(), minimal_words.end());
      if (min_len != rho || minimal_words != *words) {
        fail("reduced words of the minimal atoms differ from the involution words");
      }
      HeckeWordIndex const index(E, z, T.length(z));
      if (index.count() <= 200'000) {
        std::vector<Word> reduced;
        for (std::uint64_t r = 0; r < index.count(); ++r) {
          Word w = index.unrank(r);
          if (T.reduced_product(w) != kNoElement) {
            reduced.push_back(std::move(w));
          }
        }
        std::sort(reduced.begin(), reduced.end());
        if (reduced != hred) {
          fail("reduced Hecke words differ from filtered Hecke words");
        }
      }
      rec.data["words"]       = words->size();
      rec.data["atoms"]       = atoms.size();
      rec.data["hecke_red"]   = hred.size();
      return rec;
    }

    VerificationReport type_a_suite(Context const& ctx, VerificationReport rep) {
      auto const* pg = dynamic_cast<PermutationGroup const*>(ctx.h.group.get());
      if (pg == nullptr || !ctx.h.type_a) {
        throw UnknownSuite("type-a needs a symmetric group with the permutation backend and * = id");
      }
      TypeA const&        ta = *ctx.h.type_a;
      auto                maybe_fault = [&](std::vector<RelationSchema> s) {
        return ctx.opt.fault_seed ? inject_fault(std::move(s), *ctx.opt.fault_seed) : s;
      };
      RewriteSystem const sim(maybe_fault(sim_a_schemas(ta, true)));
      RewriteSystem const sim_plain(maybe_fault(sim_a_schemas(ta, false)));
      auto                hecke_schemas = sim_a_schemas(ta, false);
      for (auto& s : idempotent_schemas(ctx.rank)) {
        hecke_schemas.push_back(std::move(s));
      }
      RewriteSystem const sim_hecke(maybe_fault(std::move(hecke_schemas)));
      RewriteSystem const approx(maybe_fault(approx_a_schemas(ta)));
      rep.records = for_each_z(ctx, [&](ElementId z) {
        SuiteRecord rec;
        auto fail = [&](std::string msg) {
          if (rec.pass) {
            rec.data["failure"] = std::move(msg);
          }
          rec.pass = false;
        };
        Window const        zw = pg->window(ctx.T.element(z));
        std::vector<Window> atoms;
        for (ElementId w : ctx.E.hecke_atoms(z)) {
          atoms.push_back(pg->window(ctx.T.element(w)));
        }
        std::sort(atoms.begin(), atoms.end());
        Window const am = alpha_min(zw);
        if (!std::binary_search(atoms.begin(), atoms.end(), am)) {
          fail("alpha_min is not an atom");
        }
        if (atom_pattern_class(am, ta.affine) != atoms) {
          fail("atom pattern class differs from the atoms");
        }
        auto const primed_words = ctx.E.primed_words(z);
        auto const words        = inv_words(ctx.E, z);
        SpanResult const s1 = check_span(primed_words, sim, ctx.rank);
        SpanResult const s2 = check_span(words, sim_plain, ctx.rank);
        SpanResult const s3 = check_hecke_span(ctx.E, z, ctx.T.length(z) + ctx.opt.hecke_slack, sim_hecke);
        SpanResult const s4 = check_span(as_primed(ctx.E.reduced_hecke_words(z)), approx, ctx.rank);
        if (!s1.spans() || !s2.spans() || !s3.spans() || !s4.spans()) {
          fail("a type-A closure does not span");
        }
        std::size_t violations = 0;
        for (auto const& w : primed_words) {
          violations += forbidden_subword_scan(w, ta).size();
        }
        if (violations != 0) {
          fail("forbidden subwords found");
        }
        for (Word const& w : *ctx.E.involution_words(z)) {
          std::vector<bool> comm;
          if (!fixed_point_lemma_holds(w, ta, &comm)) {
            fail("fixed point criterion fails for " + format_word(w, ctx.rank));
            continue;
          }
          std::vector<bool> expect(w.size(), false);
          for (std::size_t i : ctx.E.commutations(w, z)) {
            expect[i] = true;
          }
          if (comm != expect) {
            fail("fixed point commutations differ for " + format_word(w, ctx.rank));
          }
        }
        rec.data["atoms"]       = atoms.size();
        rec.data["alpha_min"]   = am.to_string();
        rec.data["sim_primed"]  = s1.to_json();
        rec.data["sim_plain"]   = s2.to_json();
        rec.data["sim_hecke"]   = s3.to_json();
        rec.data["approx"]      = s4.to_json();
        rec.data["violations"]  = violations;
        return rec;
      });
      return rep;
    }

    VerificationReport backend_suite(Context const& ctx, VerificationReport rep) {
      if (!ctx.h.type_a || ctx.h.type_a->affine) {
        throw UnknownSuite("backend needs a finite symmetric group");
      }
      std::size_t const n = ctx.h.type_a->n;
      auto perm = std::make_shared<PermutationGroup const>(n, false);
      auto gen  = std::make_shared<GenericGroup const>(symmetric_group_system(n, false));
      auto tp   = std::make_shared<CayleyTable const>(perm, 100'000);
      auto tg   = std::make_shared<CayleyTable const>(gen, 100'000);
      InvolutionEngine const ep(tp), eg(tg);
      SuiteRecord            rec;
      rec.z = "all";
      auto fail = [&](std::string msg) {
        if (rec.pass) {
          rec.data["failure"] = std::move(msg);
        }
        rec.pass = false;
      };
      if (tp->size() != tg->size()) {
        fail("group orders differ");
      }
      std::vector<ElementId> to_generic(tp->size());
      for (ElementId w = 0; w < tp->size(); ++w) {
        to_generic[w] = tg->from_word(tp->reduced_word(w));
        ElementId const g = to_generic[w];
        if (tp->length(w) != tg->length(g) || tp->right_descents(w) != tg->right_descents(g)
            || tp->left_descents(w) != tg->left_descents(g)
            || tp->reduced_word(w) != tg->reduced_word(g)) {
          fail("lengths, descents or reduced words differ");
        }
      }
      std::size_t pairs = 0;
      for (ElementId v = 0; v < tp->size(); ++v) {
        for (ElementId w = 0; w < tp->size(); ++w) {
          ++pairs;
          if (to_generic[tp->demazure(v, w)] != tg->demazure(to_generic[v], to_generic[w])
              || to_generic[tp->multiply(v, w)] != tg->multiply(to_generic[v], to_generic[w])) {
            fail("products differ");
          }
        }
      }
      std::size_t involutions = 0;
      for (ElementId z : ep.all_twisted_involutions()) {
        ++involutions;
        if (*ep.involution_words(z) != *eg.involution_words(to_generic[z])) {
          fail("involution words differ");
        }
      }
      rec.data["elements"]    = tp->size();
      rec.data["pairs"]       = pairs;
      rec.data["involutions"] = involutions;
      rep.records.push_back(std::move(rec));
      return rep;
    }

  }  // namespace

  VerificationReport run_suite(std::string const& suite, SystemHandle const& h,
                               SuiteOptions const& opt) {
    auto const start = std::chrono::steady_clock::now();
    Context const ctx{h, opt, *h.engine, *h.table, h.table->rank()};
    VerificationReport rep;
    rep.suite  = suite;
    rep.system = h.name;
    InvolutionEngine const& E = *h.engine;
    if (suite == "hh") {
      rep.records = span_suite(ctx, SchemaSet::HH, [&](ElementId z) { return inv_words(E, z); });
    } else if (suite == "hh-primed") {
      rep.records = span_suite(ctx, SchemaSet::HHPrimed, [&](ElementId z) { return E.primed_words(z); });
    } else if (suite == "primed-min") {
      rep.records = span_suite(ctx, SchemaSet::PrimedMin, [&](ElementId z) { return E.primed_words(z); });
    } else if (suite == "hecke") {
      rep.records = span_suite(ctx, SchemaSet::Hecke,
                               [&](ElementId z) { return as_primed(E.reduced_hecke_words(z)); });
    } else if (suite == "hecke-min") {
      RewriteSystem const rules = ctx.rules(SchemaSet::HeckeMin);
      rep.records = for_each_z(ctx, [&](ElementId z) {
        SuiteRecord rec = span_record(check_span(as_primed(E.reduced_hecke_words(z)), rules, ctx.rank));
        if (is_longest(ctx, z)) {
          rec.data["atoms"]        = E.hecke_atoms(z).size();
          rec.data["atom_classes"] = atom_class_count(ctx, z);
        }
        return rec;
      });
      for (auto const& r : rep.records) {
        if (r.data.contains("atoms")) {
          rep.summary["longest_atoms"]        = r.data["atoms"];
          rep.summary["longest_atom_classes"] = r.data["atom_classes"];
        }
      }
    } else if (suite == "hecke-prop") {
      RewriteSystem const rules = ctx.rules(SchemaSet::HeckeProp);
      rep.records = for_each_z(ctx, [&](ElementId z) {
        return span_record(check_hecke_span(E, z, h.table->length(z) + opt.hecke_slack, rules));
      });
    } else if (suite == "cardinality") {
      rep.records = for_each_z(ctx, [&](ElementId z) {
        SuiteRecord       rec;
        std::size_t const r      = E.involution_words(z)->size();
        std::size_t const p      = E.primed_words(z).size();
        std::size_t const expo   = 2 * E.rho(z) - h.table->length(z);
        rec.pass                 = p == (std::size_t{1} << expo) * r;
        rec.data["inv_words"]    = r;
        rec.data["primed_words"] = p;
        rec.data["exponent"]     = expo;
        return rec;
      });
    } else if (suite == "mtwisted") {
      rep.records = for_each_z(ctx, [&](ElementId z) { return mtwisted_record(ctx, z); });
    } else if (suite == "primed-lemma") {
      rep.records = for_each_z(ctx, [&](ElementId z) { return primed_lemma_record(ctx, z); });
    } else if (suite == "words") {
      rep.records = for_each_z(ctx, [&](ElementId z) { return words_record(ctx, z); });
    } else if (suite == "simply-braided") {
      bool const          sb = is_simply_braided(h.system());
      RewriteSystem const inv_rules    = ctx.rules(SchemaSet::SimpleInv);
      RewriteSystem const primed_rules = ctx.rules(SchemaSet::SimplePrimed);
      RewriteSystem const hecke_rules  = ctx.rules(SchemaSet::SimpleHecke);
      rep.records = for_each_z(ctx, [&](ElementId z) {
        SuiteRecord      rec;
        SpanResult const a = check_span(inv_words(E, z), inv_rules, ctx.rank);
        SpanResult const b = check_span(E.primed_words(z), primed_rules, ctx.rank);
        SpanResult const c = check_span(as_primed(E.reduced_hecke_words(z)), hecke_rules, ctx.rank);
        bool const no_violation = !a.violation && !b.violation && !c.violation;
        rec.pass = no_violation && (!sb || (a.spans() && b.spans() && c.spans()));
        rec.data["inv"]    = a.to_json();
        rec.data["primed"] = b.to_json();
        rec.data["hecke"]  = c.to_json();
        return rec;
      });
      rep.summary["simply_braided"] = sb;
      if (!sb) {
        for (char const* kind : {"inv", "primed", "hecke"}) {
          bool proper = false;
          for (auto const& r : rep.records) {
            if (!r.data[kind]["spans"].get<bool>()) {
              proper = true;
              rep.summary[std::string("proper_") + kind] = r.z;
              break;
            }
          }
          if (!proper) {
            rep.pass = false;
          }
        }
      }
    } else if (suite == "sb-classify") {
      SuiteRecord rec;
      rec.z                       = "system";
      bool const sb               = is_simply_braided(h.system());
      rec.data["simply_braided"] = sb;
      if (h.classified_simply_braided) {
        rec.data["classification"] = *h.classified_simply_braided;
        rec.pass                   = sb == *h.classified_simply_braided;
      }
      rep.records.push_back(std::move(rec));
    } else if (suite == "type-a") {
      rep = type_a_suite(ctx, std::move(rep));
    } else if (suite == "backend") {
      rep = backend_suite(ctx, std::move(rep));
    } else {
      throw UnknownSuite(suite);
    }
    std::size_t failures = 0;
    for (auto const& r : rep.records) {
      if (!r.pass) {
        ++failures;
        rep.pass = false;
      }
    }
    rep.summary["failures"] = failures;
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
  }

}  // namespace coxword
