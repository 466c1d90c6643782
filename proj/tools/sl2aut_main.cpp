// Command-line surface: classification queries plus the finite-field
// verification harness. Text output is aligned and deterministic; --json
// switches every subcommand to a schema-stable single-line object.
//
// Exit codes: 0 answers (including reported divergences, unless --strict),
// 1 domain errors, 2 argument/literal parse errors.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sl2aut/classify.hpp"
#include "sl2aut/oracle.hpp"
#include "sl2aut/polynomial.hpp"

using njson = nlohmann::ordered_json;
using namespace sl2aut;

namespace {

const char* plural(std::int64_t n, const char* one, const char* many) {
  return n == 1 ? one : many;
}

std::string emit(const njson& j) { return j.dump() + "\n"; }

// "(l=6, r=1)  entry class 1  trace 1"
std::string record_row(const ClassRecord& rec) {
  return "(l=" + std::to_string(rec.l) + ", r=" + std::to_string(rec.r) +
         ")  entry class " + rec.entry_class + "  trace " + rec.trace;
}

std::string record_rep_text(const ClassRecord& rec) {
  return rec.symbolic ? "(symbolic trace; no exact matrix)" : rec.literal;
}

njson record_json(const ClassRecord& rec) {
  njson j;
  j["m"] = rec.m;
  j["l"] = rec.l;
  j["r"] = rec.r;
  j["entry_class"] = rec.entry_class;
  j["trace"] = rec.trace;
  if (rec.symbolic) {
    j["representative"] = nullptr;
  } else {
    njson mat;
    mat["entries"] = *rec.entries;
    if (rec.sqrt_tag)
      mat["tag"] = njson{{"sqrt", *rec.sqrt_tag}};
    else
      mat["tag"] = "pure";
    j["representative"] = mat;
  }
  return j;
}

// classes/rep share the record source; --sqrt selects one rational square
// class for m = 2 (the only infinite case).
std::vector<ClassRecord> fetch_records(std::int64_t m,
                                       const FieldDescriptor& fd,
                                       std::optional<std::int64_t> sqrt_arg) {
  if (sqrt_arg) {
    if (fd.kind != FieldKind::Rationals)
      throw DomainError("--sqrt applies to --field Q only");
    if (m != 2)
      throw DomainError(
          "--sqrt applies to m = 2 only; other orders have finitely many "
          "classes");
    return {rational_square_class_record(BigInt(*sqrt_arg))};
  }
  return realizable_classes(m, fd);
}

std::string witness_entry(const ModCtx& ctx, Domain d, std::int64_t v) {
  if (d == Domain::Pure || v == 0) return std::to_string(v);
  return std::to_string(v) + "*sqrt(" + std::to_string(ctx.ns) + ")";
}

std::string witness_literal(const ModCtx& ctx, const VerifyWitness& w) {
  auto e = unpack_code(ctx, w.code);
  return witness_entry(ctx, w.domain, e[0]) + "," +
         witness_entry(ctx, w.domain, e[1]) + ";" +
         witness_entry(ctx, w.domain, e[2]) + "," +
         witness_entry(ctx, w.domain, e[3]);
}

njson witness_json(const ModCtx& ctx, const VerifyWitness& w) {
  auto e = unpack_code(ctx, w.code);
  njson mat;
  mat["entries"] = {std::to_string(e[0]), std::to_string(e[1]),
                    std::to_string(e[2]), std::to_string(e[3])};
  if (w.domain == Domain::Pure)
    mat["tag"] = "pure";
  else
    mat["tag"] = njson{{"sqrt", std::to_string(ctx.ns)}};
  njson j;
  j["kind"] = w.kind;
  j["matrix"] = mat;
  return j;
}

njson verify_json(const VerifyReport& rep) {
  ModCtx ctx(rep.p);
  njson j;
  j["p"] = rep.p;
  njson rows = njson::array();
  for (const auto& row : rep.rows) {
    njson r;
    r["m"] = row.m;
    r["oracle_semisimple"] = row.oracle_semisimple;
    r["oracle_exceptional"] = row.oracle_exceptional;
    r["paper"] = row.paper;
    r["agree"] = row.agree;
    njson ws = njson::array();
    for (const auto& w : row.witnesses) ws.push_back(witness_json(ctx, w));
    r["witnesses"] = ws;
    rows.push_back(r);
  }
  j["results"] = rows;
  return j;
}

void verify_text(const VerifyReport& rep, std::ostream& os) {
  ModCtx ctx(rep.p);
  os << "p=" << rep.p << " ns=" << rep.ns << "\n";
  os << "   m  semisimple  exceptional  formula  agree\n";
  char buf[128];
  for (const auto& row : rep.rows) {
    std::snprintf(buf, sizeof buf, "%4lld  %10lld  %11lld  %7lld  %s",
                  static_cast<long long>(row.m),
                  static_cast<long long>(row.oracle_semisimple),
                  static_cast<long long>(row.oracle_exceptional),
                  static_cast<long long>(row.paper),
                  row.agree ? "yes" : "DIVERGE");
    os << buf << "\n";
    for (const auto& w : row.witnesses)
      os << "  witness " << w.kind << ": " << witness_literal(ctx, w) << "\n";
  }
}

struct EigenpairsArgs {
  std::int64_t m = 0;
  bool json = false;
};

struct CountArgs {
  std::int64_t m = 0;
  std::string field;
  bool json = false;
};

struct ClassesArgs {
  std::int64_t m = 0;
  std::string field;
  std::optional<std::int64_t> sqrt_arg;
  std::int64_t index = 1;
  bool json = false;
};

struct MatrixArgs {
  std::vector<std::string> matrices;
  std::string field;
  bool json = false;
};

struct VerifyArgs {
  std::int64_t p = 0;
  std::int64_t m_max = 12;
  bool strict = false;
  bool json = false;
  std::string out;
};

struct MinpolyArgs {
  std::int64_t l = 0;
  bool json = false;
};

void run_eigenpairs(const EigenpairsArgs& a) {
  auto pairs = m_valid_eigenpairs(a.m);
  auto orbits = eigenpairs_up_to_sign(a.m);
  auto orbit_index = [&](const Eigenpair& e) -> std::int64_t {
    for (std::size_t i = 0; i < orbits.size(); ++i)
      if (orbits[i].contains(e)) return static_cast<std::int64_t>(i) + 1;
    throw InvariantViolation("eigenpair missing from its negation orbits");
  };
  if (a.json) {
    njson j;
    j["m"] = a.m;
    njson arr = njson::array();
    for (const auto& e : pairs) {
      njson row;
      row["l"] = e.l;
      row["r"] = e.r;
      row["trace"] = eigenpair_trace_symbol(e);
      row["orbit"] = orbit_index(e);
      arr.push_back(row);
    }
    j["eigenpairs"] = arr;
    std::cout << emit(j);
    return;
  }
  std::cout << "m=" << a.m << ": " << pairs.size() << " m-valid "
            << plural(static_cast<std::int64_t>(pairs.size()), "eigenpair",
                      "eigenpairs")
            << ", " << orbits.size() << " "
            << plural(static_cast<std::int64_t>(orbits.size()), "orbit",
                      "orbits")
            << " up to sign\n";
  for (const auto& e : pairs)
    std::cout << "(l=" << e.l << ", r=" << e.r << ")  trace "
              << eigenpair_trace_symbol(e) << "  orbit " << orbit_index(e)
              << "\n";
}

void run_count(const CountArgs& a) {
  FieldDescriptor fd = field_parse(a.field);
  ClassCount cc = count_classes(a.m, fd);
  if (a.json) {
    njson j;
    if (cc.finite)
      j["finite"] = cc.finite->convert_to<std::int64_t>();
    else
      j["infinite"] = "square_classes";
    if (!cc.note.empty()) j["note"] = cc.note;
    std::cout << emit(j);
    return;
  }
  std::cout << "C(" << a.m << ", " << fd.str() << ") = ";
  if (cc.finite)
    std::cout << *cc.finite << "\n";
  else
    std::cout << "infinite (one class per square class)\n";
  if (!cc.note.empty()) std::cout << "note: " << cc.note << "\n";
}

void run_classes(const ClassesArgs& a) {
  FieldDescriptor fd = field_parse(a.field);
  auto recs = fetch_records(a.m, fd, a.sqrt_arg);
  if (a.json) {
    njson j;
    j["m"] = a.m;
    j["field"] = fd.str();
    njson arr = njson::array();
    for (const auto& rec : recs) arr.push_back(record_json(rec));
    j["classes"] = arr;
    std::cout << emit(j);
    return;
  }
  std::cout << "m=" << a.m << " over " << fd.str() << ": " << recs.size()
            << " "
            << plural(static_cast<std::int64_t>(recs.size()), "class",
                      "classes")
            << "\n";
  for (const auto& rec : recs) {
    std::cout << "class " << rec.index << ": " << record_row(rec) << "\n";
    std::cout << "  representative: " << record_rep_text(rec) << "\n";
  }
}

void run_rep(const ClassesArgs& a) {
  FieldDescriptor fd = field_parse(a.field);
  auto recs = fetch_records(a.m, fd, a.sqrt_arg);
  if (a.index < 1 || a.index > static_cast<std::int64_t>(recs.size()))
    throw DomainError("class index " + std::to_string(a.index) +
                      " out of range: m=" + std::to_string(a.m) + " over " +
                      fd.str() + " has " + std::to_string(recs.size()) + " " +
                      plural(static_cast<std::int64_t>(recs.size()), "class",
                             "classes"));
  const ClassRecord& rec = recs[static_cast<std::size_t>(a.index - 1)];
  if (a.json) {
    std::cout << emit(record_json(rec));
    return;
  }
  std::cout << "m=" << a.m << " over " << fd.str() << " class " << a.index
            << ": " << record_row(rec) << "\n";
  std::cout << "representative: " << record_rep_text(rec) << "\n";
  std::cout << "A^" << a.m << " = " << (rec.sign < 0 ? "-I" : "I") << "\n";
}

void run_order(const MatrixArgs& a) {
  FieldDescriptor fd = field_parse(a.field);
  with_element_field(fd, [&](auto ctx) {
    auto A = parse_rep(a.matrices.at(0), ctx);
    auto ord = inner_order(A, ctx);
    if (a.json) {
      njson j;
      if (ord) {
        j["order"] = ord->m;
        j["sign"] = ord->sign;
      } else {
        j["order"] = nullptr;
      }
      std::cout << emit(j);
      return;
    }
    if (ord)
      std::cout << "order " << ord->m << " (A^" << ord->m << " = "
                << (ord->sign < 0 ? "-I" : "I") << ")\n";
    else
      std::cout << "not finite (no power up to cap " << ctx.order_cap()
                << " is +I or -I)\n";
  });
}

void run_iso(const MatrixArgs& a) {
  FieldDescriptor fd = field_parse(a.field);
  with_element_field(fd, [&](auto ctx) {
    auto A = parse_rep(a.matrices.at(0), ctx);
    auto B = parse_rep(a.matrices.at(1), ctx);
    bool iso = is_isomorphic(A, B, ctx);
    if (a.json) {
      njson j;
      j["isomorphic"] = iso;
      if (iso) j["conjugator"] = mat_literal(conjugating_matrix(A, B, ctx));
      std::cout << emit(j);
      return;
    }
    if (iso) {
      std::cout << "isomorphic\n";
      std::cout << "Q = " << mat_literal(conjugating_matrix(A, B, ctx))
                << "\n";
    } else {
      std::cout << "not isomorphic\n";
    }
  });
}

// returns the exit code (1 under --strict with a divergent row)
int run_verify(const VerifyArgs& a) {
  VerifyReport rep = verify_report(a.p, a.m_max, Exec::Parallel);
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw DomainError("cannot open --out file: " + a.out);
    f << emit(verify_json(rep));
  }
  if (a.json)
    std::cout << emit(verify_json(rep));
  else
    verify_text(rep, std::cout);
  if (a.strict)
    for (const auto& row : rep.rows)
      if (!row.agree) return 1;
  return 0;
}

void run_minpoly(const MinpolyArgs& a) {
  IntPolynomial psi = real_cyclotomic_minpoly(a.l);
  if (a.json) {
    njson j;
    j["l"] = a.l;
    j["degree"] = psi.degree();
    njson arr = njson::array();
    for (std::int64_t i = 0; i <= psi.degree(); ++i)
      arr.push_back(psi.coeff(i).str());
    j["coefficients"] = arr;
    std::cout << emit(j);
    return;
  }
  std::cout << "Psi_" << a.l << " = " << psi.str("x") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact classification of finite-order inner automorphisms of SL(2,k)"};
  app.require_subcommand(1);
  int rc = 0;

  auto ea = std::make_shared<EigenpairsArgs>();
  auto* eigenpairs = app.add_subcommand(
      "eigenpairs", "list the m-valid eigenpairs and their negation orbits");
  eigenpairs->add_option("m", ea->m, "inner order")->required();
  eigenpairs->add_flag("--json", ea->json, "JSON output");
  eigenpairs->callback([ea] { run_eigenpairs(*ea); });

  auto ca = std::make_shared<CountArgs>();
  auto* count =
      app.add_subcommand("count", "number of isomorphy classes C(m, k)");
  count->add_option("m", ca->m, "inner order")->required();
  count->add_option("--field", ca->field,
                    "Q | R | Qbar | Fq:<p> | Fq:<p>^<r>")
      ->required();
  count->add_flag("--json", ca->json, "JSON output");
  count->callback([ca] { run_count(*ca); });

  auto cla = std::make_shared<ClassesArgs>();
  auto* classes = app.add_subcommand(
      "classes", "isomorphy classes of order-m inner automorphisms");
  classes->add_option("m", cla->m, "inner order")->required();
  classes->add_option("--field", cla->field, "Q | R | Qbar | Fq:<p>[^2]")
      ->required();
  auto cla_sqrt = std::make_shared<std::int64_t>(0);
  auto* cla_sqrt_opt = classes->add_option(
      "--sqrt", *cla_sqrt, "square class radicand (m=2 over Q)");
  classes->add_flag("--json", cla->json, "JSON output");
  classes->callback([cla, cla_sqrt, cla_sqrt_opt] {
    if (cla_sqrt_opt->count()) cla->sqrt_arg = *cla_sqrt;
    run_classes(*cla);
  });

  auto ra = std::make_shared<ClassesArgs>();
  auto* rep =
      app.add_subcommand("rep", "explicit representative of one class");
  rep->add_option("m", ra->m, "inner order")->required();
  rep->add_option("--field", ra->field, "Q | R | Qbar | Fq:<p>[^2]")
      ->required();
  rep->add_option("--class", ra->index, "1-based class index (default 1)");
  auto ra_sqrt = std::make_shared<std::int64_t>(0);
  auto* ra_sqrt_opt =
      rep->add_option("--sqrt", *ra_sqrt, "square class radicand (m=2 over Q)");
  rep->add_flag("--json", ra->json, "JSON output");
  rep->callback([ra, ra_sqrt, ra_sqrt_opt] {
    if (ra_sqrt_opt->count()) ra->sqrt_arg = *ra_sqrt;
    run_rep(*ra);
  });

  auto oa = std::make_shared<MatrixArgs>();
  auto* order =
      app.add_subcommand("order", "inner order of Inn_A for a matrix A");
  order->add_option("--matrix", oa->matrices, "matrix literal \"a,b;c,d\"")
      ->required()
      ->expected(1);
  order->add_option("--field", oa->field, "Q | Fq:<p> | Fq:<p>^2")->required();
  order->add_flag("--json", oa->json, "JSON output");
  order->callback([oa] { run_order(*oa); });

  auto ia = std::make_shared<MatrixArgs>();
  auto* iso = app.add_subcommand(
      "iso", "decide Inn_A = Inn_B up to GL(2,k)-conjugation");
  iso->add_option("--matrix", ia->matrices,
                  "matrix literal (give exactly two)")
      ->required()
      ->expected(2);
  iso->add_option("--field", ia->field, "Q | Fq:<p> | Fq:<p>^2")->required();
  iso->add_flag("--json", ia->json, "JSON output");
  iso->callback([ia] { run_iso(*ia); });

  auto va = std::make_shared<VerifyArgs>();
  auto* verify = app.add_subcommand(
      "verify", "compare the counting formula against the brute-force oracle");
  verify->add_option("--p", va->p, "odd prime modulus")->required();
  verify->add_option("--max-m", va->m_max, "largest inner order (default 12)");
  verify->add_flag("--strict", va->strict,
                   "exit 1 if any row diverges from the formula");
  verify->add_flag("--json", va->json, "JSON output");
  verify->add_option("--out", va->out, "also write the JSON report here");
  verify->callback([va, &rc] { rc = run_verify(*va); });

  auto ma = std::make_shared<MinpolyArgs>();
  auto* minpoly = app.add_subcommand(
      "minpoly", "minimal polynomial of 2cos(2*pi/l) over Q");
  minpoly->add_option("l", ma->l, "root-of-unity index (l >= 3)")->required();
  minpoly->add_flag("--json", ma->json, "JSON output");
  minpoly->callback([ma] { run_minpoly(*ma); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return 2;
  } catch (const UnboundedResultError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "hint: pass --sqrt <a> to select the square class of a\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
