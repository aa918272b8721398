#include "sytinv/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sytinv/enumeration.hpp"
#include "sytinv/inversion.hpp"
#include "sytinv/permutation.hpp"
#include "sytinv/statistics.hpp"

namespace sytinv {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  std::string input = "-";
  bool paths = false;
  bool pairs = false;
  std::string direction = "forward";
  bool trace = false;
  std::string shape;
  std::vector<std::string> stats;
  bool check = false;
  unsigned par = 1;
  std::string perm;
  bool inverse = false;
  bool bridge = false;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

bool json_mode(const Options& o) { return o.format == "json"; }

Tableau read_input(const Options& o, std::istream& in) {
  std::stringstream buffer;
  if (o.input == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(o.input);
    if (!file) throw ParseError("cannot open input file '" + o.input + "'");
    buffer << file.rdbuf();
  }
  return parse_tableau(buffer.str());
}

std::string point_string(LatticePoint p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

std::string contents_string(const std::vector<int>& v, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string blocks_string(const Tableau& t, const std::vector<std::vector<Cell>>& blocks) {
  std::string out;
  for (const auto& b : blocks) {
    std::vector<int> c;
    for (Cell cell : b) c.push_back(t.at(cell));
    out += "[" + contents_string(c) + "]";
  }
  return out.empty() ? "-" : out;
}

std::string blocks_string(const std::vector<std::vector<int>>& blocks) {
  std::string out;
  for (const auto& b : blocks) out += "[" + contents_string(b) + "]";
  return out.empty() ? "-" : out;
}

Json tableau_json(const Tableau& t) {
  const Shape& s = t.shape();
  Json rows = Json::array();
  for (int i = 1; i <= s.rows(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= s.row_end(i); ++j) {
      if (j < s.row_begin(i)) row.push_back(nullptr);
      else row.push_back(t.at(i, j));
    }
    rows.push_back(std::move(row));
  }
  Json j;
  j["shape"] = std::vector<int>(s.outer().parts().begin(), s.outer().parts().end());
  j["inner"] = std::vector<int>(s.inner().parts().begin(), s.inner().parts().end());
  j["rows"] = std::move(rows);
  return j;
}

Json path_json(const LatticePath& p, int k) {
  Json j;
  j["k"] = k;
  j["start"] = {p.start().x, p.start().y};
  j["steps"] = p.step_string() == "-" ? std::string() : p.step_string();
  return j;
}

// Rendered tableau lines prefixed with "# " so traces stay parseable.
void write_commented(std::ostream& out, const Tableau& t) {
  std::istringstream lines(render_tableau(t));
  for (std::string line; std::getline(lines, line);) out << "#   " << line << '\n';
}

bool is_staircase(const Tableau& t) { return t.size() > 0 && t.shape() == staircase_shape(t.size()); }

// ---- stats ------------------------------------------------------------------

int cmd_stats(const Options& o, Io io) {
  const Tableau t = read_input(o, io.in);
  const DescentSet des = descent_set(t);
  const std::vector<int> code = inv_code(t);
  const int inv = inv_statistic(t);
  const int cinv = cinv_statistic(t);
  InversionPathSet ps;
  if (o.paths) ps = inversion_path_set(t);
  std::vector<InversionPair> pairs;
  if (o.pairs) pairs = inversion_pairs(t);
  const int n = t.size();

  if (json_mode(o)) {
    Json j = tableau_json(t);
    Json st;
    st["n"] = n;
    st["descents"] = std::vector<int>(des.indices().begin(), des.indices().end());
    st["maj"] = maj(t);
    st["comaj"] = comaj(t);
    st["inv"] = inv;
    st["cinv"] = cinv;
    st["code"] = code;
    j["stats"] = std::move(st);
    if (o.paths) {
      Json arr = Json::array();
      for (std::size_t i = 0; i < ps.paths.size(); ++i) arr.push_back(path_json(ps.paths[i], n - static_cast<int>(i)));
      j["paths"] = std::move(arr);
      j["exempt"] = {ps.exempt.row, ps.exempt.col};
      j["closing"] = path_json(ps.closing, 1);
    }
    if (o.pairs) {
      Json arr = Json::array();
      for (const auto& p : pairs) arr.push_back({p.path_content, p.partner_content});
      j["pairs"] = std::move(arr);
    }
    io.out << j.dump(2) << '\n';
    return kExitOk;
  }

  io.out << "n: " << n << '\n'
         << "shape: " << to_string(t.shape()) << '\n'
         << "descents: " << to_string(des) << '\n'
         << "maj: " << maj(t) << '\n'
         << "comaj: " << comaj(t) << '\n'
         << "inv: " << inv << '\n'
         << "cinv: " << cinv << '\n'
         << "code: (" << contents_string(code) << ")\n";
  if (o.paths) {
    io.out << "paths:\n";
    for (std::size_t i = 0; i < ps.paths.size(); ++i)
      io.out << "  k=" << n - static_cast<int>(i) << " start=" << point_string(ps.paths[i].start())
             << " steps=" << ps.paths[i].step_string() << '\n';
    io.out << "  exempt=" << to_string(ps.exempt) << " start=" << point_string(ps.closing.start())
           << " steps=" << ps.closing.step_string() << '\n';
  }
  if (o.pairs) {
    io.out << "pairs:";
    for (const auto& p : pairs) io.out << " (" << p.path_content << "," << p.partner_content << ")";
    io.out << '\n';
  }
  return kExitOk;
}

// ---- map --------------------------------------------------------------------

int cmd_map(const Options& o, Io io) {
  const Tableau t = read_input(o, io.in);
  const bool forward = o.direction == "forward";
  Tableau result;
  Json stages = Json::array();
  std::ostringstream trace;

  if (forward) {
    Tableau prev = t;
    for (const auto& st : psi_trace(t)) {
      if (o.trace) {
        trace << "# psi_" << st.k << ": path start=" << point_string(st.path.start()) << " steps="
              << st.path.step_string() << " anchor=" << to_string(st.blocks.anchor_side)
              << " blocks=" << blocks_string(prev, st.blocks.blocks) << '\n';
        if (is_staircase(st.result)) trace << "#   word " << to_string(read_staircase(st.result)) << '\n';
        else write_commented(trace, st.result);
        Json s;
        s["k"] = st.k;
        s["path"] = path_json(st.path, st.k);
        s["anchor_side"] = to_string(st.blocks.anchor_side);
        Json blocks = Json::array();
        for (const auto& b : st.blocks.blocks) {
          std::vector<int> c;
          for (Cell cell : b) c.push_back(prev.at(cell));
          blocks.push_back(c);
        }
        s["blocks"] = std::move(blocks);
        s["result"] = tableau_json(st.result);
        stages.push_back(std::move(s));
      }
      prev = st.result;
    }
    result = prev;
  } else {
    Tableau prev = t;
    for (const auto& st : phi_trace(t)) {
      if (o.trace) {
        trace << "# phi_" << st.k << ": path start=" << point_string(st.path.start()) << " steps="
              << st.path.step_string() << " blocks=" << blocks_string(st.simple_blocks) << '\n';
        if (is_staircase(st.result)) trace << "#   word " << to_string(read_staircase(st.result)) << '\n';
        else write_commented(trace, st.result);
        Json s;
        s["k"] = st.k;
        s["path"] = path_json(st.path, st.k);
        s["blocks"] = st.simple_blocks;
        s["result"] = tableau_json(st.result);
        stages.push_back(std::move(s));
      }
      prev = st.result;
    }
    result = prev;
  }

  // The asserted identity: Inv of the preimage equals maj of the image.
  const Tableau& pre = forward ? t : result;
  const Tableau& img = forward ? result : t;
  const int inv = inv_statistic(pre);
  const int mj = maj(img);
  const bool roundtrip = forward ? phi(result) == t : psi(result) == t;
  const bool ok = inv == mj && roundtrip;

  if (json_mode(o)) {
    Json j;
    j["direction"] = o.direction;
    j["input"] = tableau_json(t);
    j["output"] = tableau_json(result);
    j["inv"] = inv;
    j["maj"] = mj;
    j["roundtrip"] = roundtrip;
    if (o.trace) j["stages"] = std::move(stages);
    j["pass"] = ok;
    io.out << j.dump(2) << '\n';
  } else {
    io.out << "# direction: " << o.direction << '\n';
    if (is_staircase(t)) io.out << "# word " << to_string(read_staircase(t)) << '\n';
    io.out << trace.str();
    io.out << "# inv(" << (forward ? "input" : "output") << ")=" << inv << " maj(" << (forward ? "output" : "input")
           << ")=" << mj << (ok ? " ok" : " MISMATCH") << '\n';
    io.out << render_tableau(result);
  }
  if (!ok) {
    io.err << "error: verification failed (inv=" << inv << ", maj=" << mj << ", roundtrip=" << roundtrip << ")\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

// ---- enumerate --------------------------------------------------------------

std::string class_label(const ClassComparison& c, const char* content) {
  if (!c.fixed_cell) return "all";
  return std::string(content) + "@" + to_string(*c.fixed_cell);
}

int cmd_enumerate(const Options& o, Io io) {
  if (o.shape.empty()) throw ParseError("enumerate requires --shape");
  const Shape shape = parse_shape(o.shape);
  std::vector<Statistic> stats;
  for (const auto& name : o.stats) stats.push_back(parse_statistic(name));
  if (o.stats.empty()) stats = {Statistic::Maj, Statistic::Inv};
  const unsigned workers = std::max(1u, o.par);

  const std::vector<Tableau> all = workers > 1 ? enumerate_syt_parallel(shape, workers) : enumerate_syt(shape);
  std::vector<DistributionPolynomial> polys(stats.size());
  for (const auto& t : all)
    for (std::size_t i = 0; i < stats.size(); ++i) polys[i].add(evaluate(stats[i], t));

  std::optional<EquidistributionReport> report;
  if (o.check) report = equidistribution_report(shape, workers);
  const bool ok = !report || report->pass();
  const std::string sname = to_string(shape);

  if (json_mode(o)) {
    Json j;
    j["shape"] = sname;
    j["count"] = all.size();
    Json dists = Json::array();
    for (std::size_t i = 0; i < stats.size(); ++i) {
      Json d;
      d["stat"] = to_string(stats[i]);
      d["coefficients"] = polys[i].coefficients();
      d["count"] = polys[i].at_one();
      dists.push_back(std::move(d));
    }
    j["distributions"] = std::move(dists);
    if (report) {
      auto classes = [](const std::vector<ClassComparison>& cs, const char* content) {
        Json arr = Json::array();
        for (const auto& c : cs) {
          Json e;
          e["class"] = class_label(c, content);
          e["lhs"] = c.lhs.coefficients();
          e["rhs"] = c.rhs.coefficients();
          e["pass"] = c.pass();
          arr.push_back(std::move(e));
        }
        return arr;
      };
      Json chk;
      chk["maj_inv"] = classes(report->maj_inv, "n");
      chk["comaj_cinv"] = classes(report->comaj_cinv, "1");
      chk["pass"] = report->pass();
      j["check"] = std::move(chk);
    }
    io.out << j.dump(2) << '\n';
  } else {
    io.out << "shape=" << sname << " count=" << all.size() << '\n';
    for (std::size_t i = 0; i < stats.size(); ++i)
      io.out << "shape=" << sname << " stat=" << to_string(stats[i]) << " poly=" << to_string(polys[i]) << '\n';
    if (report) {
      for (const auto& c : report->maj_inv)
        io.out << "check maj=inv class=" << class_label(c, "n") << " maj=" << to_string(c.lhs)
               << " inv=" << to_string(c.rhs) << (c.pass() ? " pass" : " FAIL") << '\n';
      for (const auto& c : report->comaj_cinv)
        io.out << "check comaj=cinv class=" << class_label(c, "1") << " comaj=" << to_string(c.lhs)
               << " cinv=" << to_string(c.rhs) << (c.pass() ? " pass" : " FAIL") << '\n';
      io.out << "check: " << (report->pass() ? "pass" : "FAIL") << '\n';
    }
  }
  if (!ok) {
    io.err << "error: equidistribution check failed for shape " << sname << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

// ---- foata ------------------------------------------------------------------

int cmd_foata(const Options& o, Io io) {
  if (o.perm.empty()) throw ParseError("foata requires --perm");
  const Permutation p = parse_permutation(o.perm);
  const Permutation image = o.inverse ? foata_inverse(p) : foata(p);
  std::optional<BridgeReport> bridge;
  std::vector<PermPhiStage> chain;
  if (o.bridge) {
    bridge = bridge_check(p);
    perm_phi_direct(p, &chain);
  }
  const bool ok = !bridge || bridge->pass();

  if (json_mode(o)) {
    Json j;
    j["input"] = to_string(p);
    j["direction"] = o.inverse ? "inverse" : "forward";
    j["output"] = to_string(image);
    j["input_stats"] = {{"inv", perm_inv(p)}, {"maj", perm_maj(p)}};
    j["output_stats"] = {{"inv", perm_inv(image)}, {"maj", perm_maj(image)}};
    if (!o.inverse) {
      Json stages = Json::array();
      for (const auto& s : foata_stages(p)) stages.push_back(contents_string(s, ' '));
      j["stages"] = std::move(stages);
    }
    if (bridge) {
      Json b;
      b["sigma"] = to_string(bridge->sigma);
      b["omega"] = to_string(bridge->omega);
      Json ch = Json::array();
      ch.push_back(to_string(p));
      for (const auto& s : chain) ch.push_back(to_string(s.result));
      b["chain"] = std::move(ch);
      b["Phi_tableau"] = to_string(bridge->tableau_phi);
      b["Phi_direct"] = to_string(bridge->direct_phi);
      b["Phi_inverse"] = to_string(bridge->direct_phi.inverse());
      b["phi_omega"] = to_string(bridge->foata_omega);
      b["tableau_matches_direct"] = bridge->tableau_matches_direct;
      b["bridge_holds"] = bridge->bridge_holds;
      b["pass"] = bridge->pass();
      j["bridge"] = std::move(b);
    }
    io.out << j.dump(2) << '\n';
  } else {
    io.out << "input: " << to_string(p) << " inv=" << perm_inv(p) << " maj=" << perm_maj(p) << '\n';
    if (!o.inverse) {
      int i = 1;
      for (const auto& s : foata_stages(p)) io.out << "  phi^(" << i++ << ") = " << contents_string(s, ' ') << '\n';
    }
    io.out << (o.inverse ? "foata_inverse: " : "foata: ") << to_string(image) << " inv=" << perm_inv(image)
           << " maj=" << perm_maj(image) << '\n';
    if (bridge) {
      io.out << "bridge: sigma=" << to_string(bridge->sigma) << " omega=" << to_string(bridge->omega) << '\n';
      io.out << "  Phi chain: " << to_string(p);
      for (const auto& s : chain) io.out << ' ' << to_string(s.result);
      io.out << '\n';
      io.out << "  Phi(sigma) tableau=" << to_string(bridge->tableau_phi) << " direct=" << to_string(bridge->direct_phi)
             << (bridge->tableau_matches_direct ? " match" : " MISMATCH") << '\n';
      io.out << "  phi(omega)=" << to_string(bridge->foata_omega)
             << " Phi(sigma)^-1=" << to_string(bridge->direct_phi.inverse())
             << (bridge->bridge_holds ? " match" : " MISMATCH") << '\n';
      io.out << "bridge: " << (bridge->pass() ? "pass" : "FAIL") << '\n';
    }
  }
  if (!ok) {
    io.err << "error: bridge identity failed for " << to_string(p) << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

// ---- render -----------------------------------------------------------------

int cmd_render(const Options& o, Io io) {
  const Tableau t = read_input(o, io.in);
  if (json_mode(o)) {
    Json j = tableau_json(t);
    j["reading_word"] = reading_word(t);
    io.out << j.dump(2) << '\n';
  } else {
    io.out << render_tableau(t);
  }
  return kExitOk;
}

void report_violations(const ValidationError& e, std::ostream& err) {
  err << "error: invalid tableau\n";
  for (const auto& v : e.violations()) {
    err << "  " << v.message << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inversion statistic and Foata-type bijections on standard Young tableaux", "sytinv"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--input", o.input, "Tableau file, or - for standard input");

  auto* stats = app.add_subcommand("stats", "Descents, maj, comaj, Inv, cinv and the inversion code");
  stats->add_flag("--paths", o.paths, "Print the inversion paths");
  stats->add_flag("--pairs", o.pairs, "Print the inversion pairs by contents");

  auto* map = app.add_subcommand("map", "Apply psi (forward) or phi (inverse)");
  map->add_option("--direction", o.direction, "forward or inverse")->check(CLI::IsMember({"forward", "inverse"}));
  map->add_flag("--trace", o.trace, "Print every stage with its path and blocks");

  auto* enumerate = app.add_subcommand("enumerate", "Distribution polynomials over SYT of a shape");
  enumerate->add_option("--shape", o.shape, "Shape such as 4,3,1 or 2,2/1")->required();
  enumerate->add_option("--stat", o.stats, "Statistics: maj, comaj, inv, cinv")->delimiter(',');
  enumerate->add_flag("--check", o.check, "Verify maj=inv and comaj=cinv equidistribution");
  enumerate->add_option("--par", o.par, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* foata_cmd = app.add_subcommand("foata", "Foata's map on permutations");
  foata_cmd->add_option("--perm", o.perm, "Permutation such as 4137562 or 10,2,1,...")->required();
  foata_cmd->add_flag("--inverse", o.inverse, "Apply the inverse map");
  foata_cmd->add_flag("--bridge", o.bridge, "Check the staircase bridge identity");

  auto* render = app.add_subcommand("render", "Render a tableau");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Io io{in, out, err};
  try {
    if (stats->parsed()) return cmd_stats(o, io);
    if (map->parsed()) return cmd_map(o, io);
    if (enumerate->parsed()) return cmd_enumerate(o, io);
    if (foata_cmd->parsed()) return cmd_foata(o, io);
    if (render->parsed()) return cmd_render(o, io);
  } catch (const ValidationError& e) {
    report_violations(e, err);
    return kExitInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace sytinv
