// spq: command-line front end for the Sp(p,q) parameter and tableau library.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "spq/io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInvalidInput = 2;

int run_hmap(const std::string& sigma_text, const std::string& format) {
  auto sigma = spq::parse_sigma(sigma_text);
  auto pair = spq::h_map(sigma);
  if (format == "json") {
    auto j = spq::to_json(pair);
    j["sigma"] = spq::render_sigma(sigma);
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "sigma: " << spq::render_sigma(sigma) << "\n\nT1:\n" << spq::render_ascii(pair.t1);
  std::cout << "\nT1 json: " << spq::to_json(pair.t1).dump() << "\n\nclass (" << pair.t2_class.size() << " member"
            << (pair.t2_class.size() == 1 ? "" : "s") << "):\n";
  for (const auto& m : pair.t2_class.members()) std::cout << spq::render_ascii(m) << '\n';
  std::cout << "descriptor: " << spq::normalize(pair.t2_class.representative()).to_string() << '\n';
  return kOk;
}

int run_enumerate(int n, int p, bool count_only) {
  if (n < 1 || p < 0 || p > n) throw spq::Error(spq::ErrorKind::OutOfDomain, "need n >= 1 and 0 <= p <= n");
  std::uint64_t count = 0;
  spq::for_each_involution(n, p, [&](const spq::SignedInvolution& s) {
    ++count;
    if (!count_only) std::cout << spq::render_sigma(s) << '\n';
  });
  if (count_only) std::cout << count << '\n';
  return kOk;
}

int run_verify(const std::string& suite, int n_max, bool as_json) {
  std::vector<spq::Report> reports;
  auto add = [&](std::vector<spq::Report> more) {
    for (auto& r : more) reports.push_back(std::move(r));
  };
  if (suite == "tau" || suite == "all") add(spq::verify_tau(n_max));
  if (suite == "wallcross" || suite == "all") add(spq::verify_wallcross(n_max));
  if (suite == "bijection" || suite == "all") add(spq::verify_bijection(n_max));
  if (suite == "all") add(spq::verify_counting(n_max));

  bool ok = true;
  nlohmann::json all = nlohmann::json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    if (as_json)
      all.push_back(spq::to_json(r));
    else
      std::cout << spq::render_text(r);
  }
  if (as_json) std::cout << all.dump(2) << '\n';
  if (!as_json) std::cout << (ok ? "all checks passed" : "verification FAILED") << '\n';
  return ok ? kOk : kVerificationFailed;
}

int run_cells(int n, int p, const std::string& dot_path) {
  auto g = spq::cells(n, p);
  std::cout << "S_{" << n << "," << p << "}: " << g.vertices.size() << " parameters, " << g.components.size()
            << " cells, " << g.descriptors.size() << " descriptors\n";
  std::cout << "cell  size  descriptor  first member\n";
  for (std::size_t c = 0; c < g.components.size(); ++c)
    std::cout << c << "  " << g.components[c].size() << "  " << g.descriptors[c].to_string() << "  "
              << spq::render_sigma(g.vertices[g.components[c].front()]) << '\n';
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw spq::Error(spq::ErrorKind::OutOfDomain, "cannot write " + dot_path);
    out << spq::to_dot(g);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameters, domino tableaux and wall-crossing for Sp(p,q)"};
  app.require_subcommand(1);

  std::string sigma, format = "ascii", suite, dot_path;
  int n = 0, p = 0, n_max = 0;
  bool count_only = false, as_json = false;

  auto* hmap = app.add_subcommand("hmap", "Tableau pair, class and descriptor of a parameter");
  hmap->add_option("--sigma", sigma, "Parameter, e.g. \"1+ 2- (3,4)+ 5+\"")->required();
  hmap->add_option("--format", format, "ascii or json")->check(CLI::IsMember({"ascii", "json"}));

  auto* enumerate = app.add_subcommand("enumerate", "List S_{n,p}");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--p", p)->required();
  enumerate->add_flag("--count-only", count_only);

  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify->add_option("suite", suite, "tau, wallcross, bijection or all")
      ->required()
      ->check(CLI::IsMember({"tau", "wallcross", "bijection", "all"}));
  verify->add_option("--n-max", n_max)->required()->check(CLI::Range(1, 8));
  verify->add_flag("--json", as_json, "Emit reports as JSON");

  auto* cells = app.add_subcommand("cells", "Cell decomposition of S_{n,p}");
  cells->add_option("--n", n)->required()->check(CLI::Range(1, 8));
  cells->add_option("--p", p)->required();
  cells->add_option("--dot", dot_path, "Write the wall-crossing graph as DOT");

  auto* orbit = app.add_subcommand("orbit", "Normalized orbit descriptor of a parameter");
  orbit->add_option("--sigma", sigma)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    if (*hmap) return run_hmap(sigma, format);
    if (*enumerate) return run_enumerate(n, p, count_only);
    if (*verify) return run_verify(suite, n_max, as_json);
    if (*cells) return run_cells(n, p, dot_path);
    if (*orbit) {
      std::cout << spq::associated_variety_of(spq::parse_sigma(sigma)).to_string() << '\n';
      return kOk;
    }
  } catch (const spq::Error& e) {
    std::cerr << "spq: " << e.what() << '\n';
    return e.kind() == spq::ErrorKind::VerificationFailure ? kVerificationFailed : kInvalidInput;
  }
  return kInvalidInput;
}
