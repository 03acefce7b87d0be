// bsgw: Gromov widths of Bott-Samelson varieties from root-system data.
//
//   bsgw report   --type A2 --word 1,2,1 --m 1,1,3
//   bsgw check-p  --input job.json
//   bsgw bott     --input collection.json
//   bsgw lattice  --type A2 --word 1,2 --m 1,1 --output points.txt
//   bsgw selftest --suite all --trials 1000 --seed 42
//
// Exit codes: 0 success, 1 input error (or failed selftest), 2 internal
// invariant violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bsgw/errors.hpp"
#include "bsgw/report.hpp"
#include "bsgw/selftest.hpp"

namespace {

using bsgw::json;

struct InputFlags {
  std::string type;
  std::string word;
  std::string m;
  std::string input;

  void attach(CLI::App* cmd) {
    cmd->add_option("--type", type, "Dynkin type, e.g. A2 or A3+B2");
    cmd->add_option("--word", word, "reduced word, e.g. 1,2,1");
    cmd->add_option("--m", m, "weights m_j, e.g. 1,1,7/2");
    cmd->add_option("--input", input, "JSON job file")->check(CLI::ExistingFile);
  }

  json load_file() const {
    std::ifstream f(input);
    try {
      return json::parse(f);
    } catch (const json::parse_error& e) {
      throw bsgw::InputError(input + ": " + e.what());
    }
  }

  bsgw::JobSpec job() const {
    if (!input.empty()) return bsgw::JobSpec::from_json(load_file());
    if (type.empty()) throw bsgw::InputError("need --type/--word/--m or --input");
    bsgw::JobSpec s;
    s.type = type;
    for (const auto& tok : split(word)) {
      try {
        std::size_t used = 0;
        s.word.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::logic_error&) {
        throw bsgw::InputError("bad letter \"" + tok + "\" in --word");
      }
    }
    s.m = split(m);
    return s;
  }

  static std::vector<std::string> split(std::string text) {
    std::vector<std::string> out;
    for (char& c : text)
      if (c == '[' || c == ']' || c == ' ') c = ',';
    std::istringstream in(text);
    for (std::string tok; std::getline(in, tok, ',');)
      if (!tok.empty()) out.push_back(tok);
    return out;
  }
};

void emit(const json& j, const std::string& format) {
  if (format == "text") std::cout << bsgw::render_text(j);
  else std::cout << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gromov widths of Bott-Samelson varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

  InputFlags report_in, checkp_in, bott_in, lattice_in;
  bool force = false;

  auto* report = app.add_subcommand("report", "full curve, polytope and toric report");
  report_in.attach(report);
  report->add_flag("--force-degeneration", force, "build the Bott tower even when (P) fails");

  auto* checkp = app.add_subcommand("check-p", "chain polytope and condition (P)");
  checkp_in.attach(checkp);

  auto* bott = app.add_subcommand("bott", "toric data of a Bott collection or a degenerate tower");
  bott_in.attach(bott);
  bott->add_flag("--force-degeneration", force, "build the Bott tower even when (P) fails");

  auto* lattice = app.add_subcommand("lattice", "count lattice points of the chain polytope");
  lattice_in.attach(lattice);
  std::uint64_t cap = 1000000;
  std::string points_file;
  lattice->add_option("--cap", cap, "abort beyond this many points")->check(CLI::PositiveNumber);
  lattice->add_option("--output", points_file, "write points here, one tuple per line");

  auto* selftest = app.add_subcommand("selftest", "seeded randomized property suites");
  std::string suite = "all";
  std::uint64_t trials = 1000, seed = 42;
  selftest->add_option("--suite", suite, "cor25|antican2|caseline|pmin-oracle|scaling|smoothfan|all");
  selftest->add_option("--trials", trials, "trials per suite");
  selftest->add_option("--seed", seed, "base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*report) {
      emit(bsgw::report_json(report_in.job().to_input(), force), format);
    } else if (*checkp) {
      emit(bsgw::check_p_json(checkp_in.job().to_input()), format);
    } else if (*bott) {
      json out = {{"schema", bsgw::kSchema}, {"command", "bott"}};
      json file = bott_in.input.empty() ? json() : bott_in.load_file();
      if (file.is_object() && file.contains("dims")) {
        auto c = bsgw::collection_from_json(file);
        auto d = file.contains("divisor") ? bsgw::divisor_from_json(file["divisor"], c)
                                          : bsgw::DivisorClass{std::vector<bsgw::Rational>(c.ray_count())};
        out["bott"] = bsgw::bott_json(c, d);
      } else {
        auto in = bott_in.job().to_input();
        out["input"] = bsgw::JobSpec::from_input(in).to_json();
        auto tower = bsgw::degenerate_bott_tower(in, force);
        out["bott"] = bsgw::tower_json(tower);
        if (tower.hypothesis_violated) std::cerr << "warning: hypothesis (P) violated\n";
      }
      for (const auto& w : out["bott"]["warnings"]) std::cerr << "warning: " << w.get<std::string>() << '\n';
      emit(out, format);
    } else if (*lattice) {
      auto in = lattice_in.job().to_input();
      auto chain = bsgw::build_chain(in);
      std::ofstream points;
      if (!points_file.empty()) {
        points.open(points_file);
        if (!points) throw bsgw::InputError("cannot write " + points_file);
      }
      std::function<void(const std::vector<bsgw::Integer>&)> sink;
      if (points.is_open())
        sink = [&](const std::vector<bsgw::Integer>& p) {
          for (std::size_t i = 0; i < p.size(); ++i) points << (i ? " " : "") << p[i].get_str();
          points << '\n';
        };
      try {
        auto res = bsgw::lattice_points(chain, cap, false, sink);
        emit({{"schema", bsgw::kSchema},
              {"command", "lattice"},
              {"input", bsgw::JobSpec::from_input(in).to_json()},
              {"count", res.count}},
             format);
      } catch (const bsgw::ResourceError& e) {
        std::cerr << "error: " << e.what() << " (partial count " << e.partial_count() << ")\n";
        return 1;
      }
    } else if (*selftest) {
      auto results = bsgw::run_selftest(suite, trials, seed);
      json out = bsgw::selftest_json(results, trials, seed);
      for (const auto& w : out["warnings"]) std::cerr << "warning: " << w.get<std::string>() << '\n';
      emit(out, format);
      return out["passed"].get<bool>() ? 0 : 1;
    }
  } catch (const bsgw::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  }
  return 0;
}
