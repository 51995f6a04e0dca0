// gzeta: command-line front end for the graph zeta library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gzeta/gzeta.hpp"

namespace {

using gzeta::cplx;
using gzeta::CoinParams;
using gzeta::Error;
using gzeta::ErrorCode;
using gzeta::Graph;
using json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

// ---------------------------------------------------------------------------
// Formatting and grids

std::string format_double(double x) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, x);
  return std::string(buffer, result.ptr);
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty())
    throw Error(ErrorCode::invalid_parameter, "cannot parse number '" + text + "'");
  return value;
}

/// "x", "yi", "x+yi", "x-yi".
cplx parse_complex(std::string text) {
  text.erase(std::remove_if(text.begin(), text.end(), ::isspace), text.end());
  if (text.empty()) throw Error(ErrorCode::invalid_parameter, "empty complex literal");
  if (text.back() != 'i' && text.back() != 'j') return {parse_double(text), 0.0};
  text.pop_back();
  // Split at the last sign that is not part of an exponent.
  for (std::size_t pos = text.size(); pos-- > 1;) {
    if ((text[pos] == '+' || text[pos] == '-') && text[pos - 1] != 'e' && text[pos - 1] != 'E') {
      const std::string imag = text.substr(pos);
      return {parse_double(text.substr(0, pos)), parse_double(imag == "+" || imag == "-" ? imag + "1" : imag)};
    }
  }
  if (text.empty() || text == "+" || text == "-") return {0.0, text == "-" ? -1.0 : 1.0};
  return {0.0, parse_double(text)};
}

/// Comma list or start:step:stop range of reals.
std::vector<double> parse_real_grid(const std::string& text) {
  std::vector<double> out;
  if (std::count(text.begin(), text.end(), ':') == 2) {
    const auto first = text.find(':'), second = text.rfind(':');
    const double start = parse_double(text.substr(0, first));
    const double step = parse_double(text.substr(first + 1, second - first - 1));
    const double stop = parse_double(text.substr(second + 1));
    if (!(step > 0.0) || stop < start) throw Error(ErrorCode::invalid_parameter, "bad range '" + text + "'");
    const auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9));
    if (count > 1'000'000) throw Error(ErrorCode::invalid_parameter, "range too long");
    for (long long k = 0; k <= count; ++k) out.push_back(start + static_cast<double>(k) * step);
  } else {
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_double(item));
  }
  if (out.empty()) throw Error(ErrorCode::invalid_parameter, "empty grid");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<cplx> parse_complex_grid(const std::string& text) {
  std::vector<cplx> out;
  if (std::count(text.begin(), text.end(), ':') == 2) {
    for (double x : parse_real_grid(text)) out.emplace_back(x, 0.0);
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_complex(item));
  if (out.empty()) throw Error(ErrorCode::invalid_parameter, "empty grid");
  std::sort(out.begin(), out.end(), gzeta::lexicographic_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    int value = 0;
    const auto result = std::from_chars(item.data(), item.data() + item.size(), value);
    if (result.ec != std::errc() || result.ptr != item.data() + item.size())
      throw Error(ErrorCode::invalid_parameter, "cannot parse integer '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) throw Error(ErrorCode::invalid_parameter, "empty integer list");
  return out;
}

// ---------------------------------------------------------------------------
// Worker pool: results land in their input slot, so output order never
// depends on scheduling.

int worker_count() {
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("GZL_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) workers = std::min(workers, cap);
  }
  return workers;
}

template <typename Result, typename Job>
std::vector<Result> parallel_map(std::size_t count, Job&& job) {
  std::vector<Result> results(count);
  const auto workers = static_cast<std::size_t>(std::min<std::size_t>(static_cast<std::size_t>(worker_count()), std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = job(i);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) results[i] = job(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

// ---------------------------------------------------------------------------
// Graph sources

struct GraphSource {
  std::string file;
  std::string family;
  int N = 0;
  int d = 0;
  int n = 0;
  int k = 0;
  std::string offsets;
  double edge_probability = 0.5;
  int min_degree = 1;
  std::uint64_t seed = 1;

  void add_options(CLI::App& app) {
    app.add_option("--graph", file, "Graph JSON file");
    app.add_option("--family", family,
                   "cycle | torus | circulant | complete | petersen | random-regular | random");
    app.add_option("--N", N, "Cycle / torus / circulant size");
    app.add_option("--d", d, "Torus dimension");
    app.add_option("--n", n, "Vertex count (complete, random families)");
    app.add_option("--k", k, "Degree (random-regular)");
    app.add_option("--offsets", offsets, "Circulant offsets, comma separated");
    app.add_option("--p", edge_probability, "Edge probability (random)");
    app.add_option("--min-degree", min_degree, "Minimum degree (random)");
    app.add_option("--seed", seed, "Seed for random families");
  }

  bool given() const { return !file.empty() || !family.empty(); }

  Graph build() const {
    if (!file.empty() && !family.empty())
      throw Error(ErrorCode::invalid_parameter, "give either --graph or --family, not both");
    if (!file.empty()) return gzeta::read_graph_file(file);
    if (family == "cycle") return gzeta::build_cycle(N);
    if (family == "torus") return gzeta::build_torus(d, N);
    if (family == "circulant") return gzeta::build_circulant(N, parse_int_list(offsets));
    if (family == "complete") return gzeta::build_complete(n);
    if (family == "petersen") return gzeta::build_petersen();
    if (family == "random-regular") return gzeta::build_random_regular(n, k, seed);
    if (family == "random") return gzeta::build_random_connected(n, edge_probability, seed, min_degree);
    if (family.empty()) throw Error(ErrorCode::invalid_parameter, "a graph source is required");
    throw Error(ErrorCode::invalid_parameter, "unknown family '" + family + "'");
  }
};

json optional_number(std::optional<double> x) { return x ? json(*x) : json(nullptr); }

std::string csv_field(const json& value) {
  if (value.is_null()) return "";
  if (value.is_number_float()) return format_double(value.get<double>());
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

void emit_rows(const std::vector<json>& rows, const std::string& format, const std::vector<std::string>& header) {
  if (format == "csv") {
    for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << header[i];
    std::cout << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < header.size(); ++i)
        std::cout << (i ? "," : "") << csv_field(row.contains(header[i]) ? row[header[i]] : json(nullptr));
      std::cout << '\n';
    }
  } else {
    for (const auto& row : rows) std::cout << row.dump() << '\n';
  }
}

// ---------------------------------------------------------------------------
// graph gen

int run_graph_gen(const GraphSource& source, const std::string& out_path) {
  const Graph g = source.build();
  const std::string text = gzeta::graph_to_json(g);
  std::ostringstream summary;
  summary << "n=" << g.num_vertices() << " m=" << g.num_edges() << " regular=" << (g.is_regular() ? "true" : "false")
          << " vertex_transitive=" << (g.vertex_transitive() ? "true" : "false") << '\n';
  if (out_path.empty() || out_path == "-") {
    std::cout << text << '\n';
    std::cerr << summary.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorCode::invalid_parameter, "cannot write " + out_path);
    out << text << '\n';
    std::cout << summary.str();
  }
  return exit_ok;
}

// ---------------------------------------------------------------------------
// zeta

struct ZetaOptions {
  std::string a_grid = "1";
  std::string b_grid = "1";
  std::string u_grid = "0.1";
  std::string method = "det";
  int order = 20;
  std::string format = "json";
};

const std::vector<std::string> zeta_header{"graph", "method", "a", "b", "u_re", "u_im", "zinv_re",
                                           "zinv_im", "tail_bound", "zeta_inv", "status", "zeta_status"};

int run_zeta(const GraphSource& source, const ZetaOptions& options) {
  const Graph g = source.build();
  if (options.method != "det" && options.method != "spectral" && options.method != "series")
    throw Error(ErrorCode::invalid_parameter, "method must be det, spectral or series");
  if (options.order < 1) throw Error(ErrorCode::invalid_parameter, "--order must be >= 1");
  const auto a_values = parse_real_grid(options.a_grid);
  const auto b_values = parse_real_grid(options.b_grid);
  const auto u_values = parse_complex_grid(options.u_grid);
  std::vector<CoinParams> coins;
  for (double a : a_values)
    for (double b : b_values) coins.emplace_back(a, b);

  const std::optional<std::vector<double>> spectrum =
      g.is_regular() ? std::optional(gzeta::transition_spectrum(g)) : std::nullopt;

  struct Job {
    std::size_t coin;
    std::size_t u;
  };
  std::vector<Job> jobs;
  for (std::size_t c = 0; c < coins.size(); ++c)
    for (std::size_t k = 0; k < u_values.size(); ++k) jobs.push_back({c, k});

  // Per-coin series data is shared by every u for that coin.
  std::vector<std::optional<gzeta::LogZetaSeries>> series(coins.size());
  std::vector<double> radius(coins.size(), 0.0);
  if (options.method == "series") {
    auto prepared = parallel_map<std::pair<gzeta::LogZetaSeries, double>>(coins.size(), [&](std::size_t c) {
      return std::pair{gzeta::log_zeta_series(g, coins[c], options.order),
                       gzeta::spectral_radius(gzeta::build_generalized_grover(g, coins[c]).values)};
    });
    for (std::size_t c = 0; c < coins.size(); ++c) {
      series[c] = std::move(prepared[c].first);
      radius[c] = prepared[c].second;
    }
  }

  const auto rows = parallel_map<json>(jobs.size(), [&](std::size_t i) {
    const CoinParams& p = coins[jobs[i].coin];
    const cplx u = u_values[jobs[i].u];
    json row;
    row["graph"] = g.name();
    row["method"] = options.method;
    row["a"] = p.a();
    row["b"] = p.b();
    row["u_re"] = u.real();
    row["u_im"] = u.imag();
    std::optional<cplx> zinv;
    std::optional<double> tail;
    std::string status = "ok";
    if (options.method == "det") {
      zinv = gzeta::zeta_reciprocal_det(g, p, u);
    } else if (options.method == "spectral") {
      if (spectrum)
        zinv = gzeta::zeta_reciprocal_regular(g, p, u, *spectrum);
      else
        status = "not-regular";
    } else {
      zinv = std::exp(-series[jobs[i].coin]->evaluate(u));
      tail = gzeta::series_tail_bound(g.num_arcs(), radius[jobs[i].coin], std::abs(u), options.order);
      if (!std::isfinite(*tail)) status = "outside-domain";
    }
    row["zinv_re"] = optional_number(zinv ? std::optional(zinv->real()) : std::nullopt);
    row["zinv_im"] = optional_number(zinv ? std::optional(zinv->imag()) : std::nullopt);
    row["tail_bound"] = tail && std::isfinite(*tail) ? json(*tail) : json(nullptr);

    std::optional<double> zeta_inv;
    std::string zeta_status = "ok";
    if (!g.vertex_transitive()) {
      zeta_status = "not-vertex-transitive";
    } else if (u.imag() != 0.0) {
      zeta_status = "complex-u";
    } else {
      try {
        zeta_inv = gzeta::generalized_zeta_reciprocal(g, p, u.real(), *spectrum);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::outside_domain) throw;
        zeta_status = "outside-domain";
      }
    }
    row["zeta_inv"] = optional_number(zeta_inv);
    row["status"] = status;
    row["zeta_status"] = zeta_status;
    return row;
  });
  emit_rows(rows, options.format, zeta_header);
  return exit_ok;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string suite;
  int rmax = 0;
  std::uint64_t seed = 1;
  int order = 20;
};

const std::vector<double> default_a{0.0, 0.3, 0.7, 1.0};
const std::vector<double> default_b{-1.5, -0.4, 0.5, 1.0, 2.0};
const std::vector<cplx> default_u{{0.05, 0.0}, {0.0, 0.1}, {0.13, 0.07}, {0.2, 0.0}, {-0.15, 0.0}};

std::vector<Graph> default_suite(std::uint64_t seed) {
  std::vector<Graph> graphs;
  for (int i = 0; i < 20; ++i) graphs.push_back(gzeta::build_random_connected(4 + i % 5, 0.5, seed + static_cast<std::uint64_t>(i)));
  for (int N = 3; N <= 8; ++N) graphs.push_back(gzeta::build_cycle(N));
  graphs.push_back(gzeta::build_complete(4));
  graphs.push_back(gzeta::build_complete(5));
  graphs.push_back(gzeta::build_petersen());
  graphs.push_back(gzeta::build_torus(2, 3));
  return graphs;
}

const std::vector<std::string> suite_names{
    "konno-sato",  "regular-closed-form", "laplacian-form", "spectral-map", "series-vs-det", "ihara-bass",
    "konno-sato-grover", "vt-power", "trace-oracle", "reduced-cycles", "torus-routes", "all"};

std::vector<gzeta::VerificationReport> run_suite(const std::string& suite, const std::vector<Graph>& graphs,
                                                 const VerifyArgs& args) {
  using gzeta::VerificationReport;
  std::vector<std::vector<VerificationReport>> chunks;
  gzeta::VerifyOptions options;
  options.series_order = args.order;

  struct Task {
    const Graph* graph;
    CoinParams coin;
  };
  auto coin_tasks = [&](auto&& admit) {
    std::vector<Task> tasks;
    for (const auto& g : graphs) {
      if (!admit(g)) continue;
      for (double a : default_a)
        for (double b : default_b) tasks.push_back({&g, CoinParams(a, b)});
    }
    return tasks;
  };
  auto any = [](const Graph&) { return true; };
  auto regular = [](const Graph& g) { return g.is_regular(); };

  if (suite == "konno-sato" || suite == "regular-closed-form" || suite == "laplacian-form" ||
      suite == "spectral-map") {
    const std::string identity = suite == "konno-sato" ? "konno-sato-generalized" : suite;
    const auto tasks = suite == "konno-sato" ? coin_tasks(any) : coin_tasks(regular);
    chunks = parallel_map<std::vector<VerificationReport>>(tasks.size(), [&](std::size_t i) {
      return gzeta::verify_identity(identity, *tasks[i].graph, tasks[i].coin, default_u, options);
    });
  } else if (suite == "series-vs-det") {
    const auto tasks = coin_tasks(any);
    chunks = parallel_map<std::vector<VerificationReport>>(tasks.size(), [&](std::size_t i) {
      const double rho = gzeta::spectral_radius(gzeta::build_generalized_grover(*tasks[i].graph, tasks[i].coin).values);
      std::vector<cplx> samples;
      for (cplx u : default_u)
        if (std::abs(u) * rho <= 0.5) samples.push_back(u);
      return gzeta::verify_identity(suite, *tasks[i].graph, tasks[i].coin, samples, options);
    });
  } else if (suite == "ihara-bass" || suite == "konno-sato-grover") {
    std::vector<const Graph*> admitted;
    for (const auto& g : graphs)
      if (suite == "konno-sato-grover" || g.min_degree() >= 2) admitted.push_back(&g);
    chunks = parallel_map<std::vector<VerificationReport>>(admitted.size(), [&](std::size_t i) {
      return gzeta::verify_identity(suite, *admitted[i], CoinParams(0.0, 1.0), default_u, options);
    });
  } else if (suite == "vt-power") {
    const auto tasks = coin_tasks([](const Graph& g) { return g.vertex_transitive(); });
    chunks = parallel_map<std::vector<VerificationReport>>(tasks.size(), [&](std::size_t i) {
      std::vector<VerificationReport> out;
      for (double u : {-0.15, 0.05, 0.1, 0.2}) {
        try {
          auto reports = gzeta::verify_identity(suite, *tasks[i].graph, tasks[i].coin, {cplx(u, 0.0)}, options);
          out.insert(out.end(), reports.begin(), reports.end());
        } catch (const Error& e) {
          if (e.code() != ErrorCode::outside_domain) throw;
        }
      }
      return out;
    });
  } else if (suite == "trace-oracle") {
    const int rmax = args.rmax > 0 ? args.rmax : 6;
    const auto tasks = coin_tasks([](const Graph& g) { return g.num_edges() <= 12; });
    chunks = parallel_map<std::vector<VerificationReport>>(tasks.size(), [&](std::size_t i) {
      return gzeta::verify_trace_oracle(*tasks[i].graph, tasks[i].coin, rmax);
    });
  } else if (suite == "reduced-cycles") {
    const int rmax = args.rmax > 0 ? args.rmax : 8;
    std::vector<const Graph*> admitted;
    for (const auto& g : graphs)
      if (g.vertex_transitive() && g.min_degree() >= 2) admitted.push_back(&g);
    chunks = parallel_map<std::vector<VerificationReport>>(admitted.size(), [&](std::size_t i) {
      return gzeta::verify_reduced_cycles(*admitted[i], rmax);
    });
  } else if (suite == "torus-routes") {
    std::vector<std::pair<int, int>> tori;
    for (int d = 1; d <= 2; ++d)
      for (int N = 3; N <= 5; ++N) tori.emplace_back(d, N);
    chunks = parallel_map<std::vector<VerificationReport>>(tori.size(), [&](std::size_t i) {
      const auto [d, N] = tori[i];
      const Graph torus = gzeta::build_torus(d, N);
      std::vector<VerificationReport> out;
      for (double a : {0.0, 0.5, 1.0})
        for (double b : {0.5, 1.0})
          for (double u : {0.05, 0.1, 0.15}) {
            const CoinParams p(a, b);
            const double finite = gzeta::torus_zeta_reciprocal_finite<double>(d, N, p, u);
            const gzeta::LogDeterminant det = gzeta::zeta_reciprocal_log_det(torus, p, u);
            const double by_det = std::exp(det.log_abs / torus.num_vertices());
            out.push_back(gzeta::make_report("torus-routes", torus, a, b, u, finite, by_det, 1e-10));
          }
      return out;
    });
  } else {
    throw Error(ErrorCode::invalid_parameter, "unknown suite '" + suite + "'");
  }
  std::vector<VerificationReport> reports;
  for (auto& chunk : chunks) reports.insert(reports.end(), chunk.begin(), chunk.end());
  return reports;
}

int run_verify(const VerifyArgs& args, const GraphSource& source) {
  if (std::find(suite_names.begin(), suite_names.end(), args.suite) == suite_names.end()) {
    std::cerr << "unknown suite '" << args.suite << "'\n";
    return exit_usage;
  }
  std::vector<Graph> graphs;
  if (source.given())
    graphs.push_back(source.build());
  else
    graphs = default_suite(args.seed);

  std::vector<std::string> suites;
  if (args.suite == "all")
    suites.assign(suite_names.begin(), suite_names.end() - 1);
  else
    suites.push_back(args.suite);

  bool all_pass = true;
  std::size_t count = 0;
  for (const auto& suite : suites) {
    // A single user-supplied graph may not qualify for every suite.
    std::vector<gzeta::VerificationReport> reports;
    try {
      reports = run_suite(suite, graphs, args);
    } catch (const Error& e) {
      if (args.suite == "all" && (e.code() == ErrorCode::not_regular || e.code() == ErrorCode::unsupported_graph))
        continue;
      throw;
    }
    for (const auto& r : reports) {
      std::cout << gzeta::to_json(r).dump() << '\n';
      all_pass = all_pass && r.pass;
    }
    count += reports.size();
  }
  std::cerr << count << " reports, " << (all_pass ? "all passed" : "FAILURES") << '\n';
  return all_pass ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------------------
// torus

struct TorusArgs {
  int d = 2;
  double a = 1.0;
  double b = 1.0;
  double u = 0.1;
  std::string sizes;
  bool limit = false;
  double tol = 1e-10;
};

int run_torus(const TorusArgs& args) {
  const CoinParams p(args.a, args.b);
  const gzeta::TorusParams torus(args.d, p);
  if (args.sizes.empty() && !args.limit)
    throw Error(ErrorCode::invalid_parameter, "give --N and/or --limit");
  if (!(args.tol > 0.0)) throw Error(ErrorCode::invalid_parameter, "--tol must be positive");
  auto base_row = [&](json n_or_limit) {
    json row;
    row["d"] = args.d;
    row["N_or_limit"] = std::move(n_or_limit);
    row["a"] = args.a;
    row["b"] = args.b;
    row["u"] = args.u;
    return row;
  };
  auto flagged = [&](json n_or_limit, const Error& e) {
    json row = base_row(std::move(n_or_limit));
    row["value"] = nullptr;
    row["error_estimate"] = nullptr;
    row["grid"] = nullptr;
    row["status"] = std::string(gzeta::to_string(e.code()));
    std::cout << row.dump() << '\n';
  };

  if (!args.sizes.empty()) {
    const auto sizes = parse_int_list(args.sizes);
    for (int N : sizes)
      if (N < 3) throw Error(ErrorCode::invalid_parameter, "torus needs N >= 3");
    try {
      const auto table = gzeta::torus_convergence_table(args.d, p, args.u, sizes);
      for (const auto& r : table.rows) {
        json row = base_row(r.N);
        row["value"] = r.finite_value;
        row["error_estimate"] = nullptr;
        row["grid"] = r.N;
        row["gap_to_limit"] = r.gap;
        row["status"] = "ok";
        std::cout << row.dump() << '\n';
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::outside_domain) throw;
      for (int N : sizes) flagged(N, e);
    }
  }
  if (args.limit) {
    try {
      const auto result = gzeta::torus_limit_integral<double>(args.d, p, args.u, args.tol, worker_count());
      json row = base_row("limit");
      row["value"] = result.value;
      row["error_estimate"] = result.error_estimate;
      row["grid"] = result.grid_points_per_axis;
      row["status"] = "ok";
      row["integrand"] = "log((1 + " + format_double(torus.sigma()) + " u^2) - " +
                         format_double(torus.eta() / args.d) + " u sum_j cos theta_j)";
      std::cout << row.dump() << '\n';
    } catch (const gzeta::QuadratureNotConverged& e) {
      json row = base_row("limit");
      row["value"] = e.best().value;
      row["error_estimate"] = e.best().error_estimate;
      row["grid"] = e.best().grid_points_per_axis;
      row["status"] = "no-convergence";
      std::cout << row.dump() << '\n';
    } catch (const Error& e) {
      if (e.code() != ErrorCode::outside_domain) throw;
      flagged("limit", e);
    }
  }
  return exit_ok;
}

// ---------------------------------------------------------------------------
// matrix

int run_matrix(const GraphSource& source, double a, double b, bool support) {
  const Graph g = source.build();
  const auto grover = gzeta::build_generalized_grover(g, CoinParams(a, b));
  std::cout << gzeta::matrix_to_csv(support ? gzeta::positive_support(grover.values) : grover.values);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Grover matrices and (a,b)-zeta functions of graphs"};
  app.require_subcommand(1);

  auto* graph_cmd = app.add_subcommand("graph", "Graph utilities");
  graph_cmd->require_subcommand(1);
  auto* gen_cmd = graph_cmd->add_subcommand("gen", "Generate a graph in canonical JSON form");
  GraphSource gen_source;
  gen_source.add_options(*gen_cmd);
  std::string gen_out;
  gen_cmd->add_option("--out,-o", gen_out, "Output file (default stdout)");

  auto* zeta_cmd = app.add_subcommand("zeta", "Evaluate Z_{a,b}(G,u)^-1 over parameter grids");
  GraphSource zeta_source;
  zeta_source.add_options(*zeta_cmd);
  ZetaOptions zeta_options;
  zeta_cmd->add_option("-a", zeta_options.a_grid, "a grid (list or start:step:stop)");
  zeta_cmd->add_option("-b", zeta_options.b_grid, "b grid");
  zeta_cmd->add_option("-u", zeta_options.u_grid, "u grid; entries may be complex, e.g. 0.1+0.2i");
  zeta_cmd->add_option("--method", zeta_options.method, "det | spectral | series");
  zeta_cmd->add_option("--order", zeta_options.order, "Series order R");
  zeta_cmd->add_option("--format", zeta_options.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run an identity verification suite");
  VerifyArgs verify_args;
  GraphSource verify_source;
  verify_cmd->add_option("suite", verify_args.suite, "Suite name")->required();
  verify_cmd->add_option("--rmax", verify_args.rmax, "Largest cycle length for oracle suites");
  verify_cmd->add_option("--order", verify_args.order, "Series order for series-vs-det");
  verify_cmd->add_option("--suite-seed", verify_args.seed, "Base seed of the random graphs in the default suite");
  verify_source.add_options(*verify_cmd);

  auto* torus_cmd = app.add_subcommand("torus", "Finite torus values and the N -> infinity limit");
  TorusArgs torus_args;
  torus_cmd->add_option("--d", torus_args.d, "Dimension");
  torus_cmd->add_option("-a,--a", torus_args.a, "Coin parameter a");
  torus_cmd->add_option("-b,--b", torus_args.b, "Coin parameter b");
  torus_cmd->add_option("-u,--u", torus_args.u, "Real u");
  torus_cmd->add_option("--N", torus_args.sizes, "Comma list of torus sizes");
  torus_cmd->add_flag("--limit", torus_args.limit, "Also compute the limit integral");
  torus_cmd->add_option("--tol", torus_args.tol, "Quadrature tolerance");

  auto* matrix_cmd = app.add_subcommand("matrix", "Dump the generalized Grover matrix as CSV");
  GraphSource matrix_source;
  matrix_source.add_options(*matrix_cmd);
  double matrix_a = 1.0, matrix_b = 1.0;
  bool matrix_support = false;
  matrix_cmd->add_option("-a", matrix_a, "Coin parameter a");
  matrix_cmd->add_option("-b", matrix_b, "Coin parameter b");
  matrix_cmd->add_flag("--support", matrix_support, "Dump the positive support instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (gen_cmd->parsed()) return run_graph_gen(gen_source, gen_out);
    if (zeta_cmd->parsed()) return run_zeta(zeta_source, zeta_options);
    if (verify_cmd->parsed()) return run_verify(verify_args, verify_source);
    if (torus_cmd->parsed()) return run_torus(torus_args);
    if (matrix_cmd->parsed()) return run_matrix(matrix_source, matrix_a, matrix_b, matrix_support);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
