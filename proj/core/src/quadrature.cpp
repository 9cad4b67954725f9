#include "ladderlab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "ladderlab/error.hpp"

namespace ladderlab {
namespace {

// QUADPACK qk21 abscissae and weights. Gauss nodes are xgk[1], xgk[3], ...
constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();

double checked(const std::function<double(double)>& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::non_finite, "integrand is not finite at t = " + std::to_string(x));
  }
  return v;
}

struct Evaluated {
  Panel panel;
  // Error estimate cannot drop below this rounding floor.
  double floor;
};

Evaluated gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, 10> f1{}, f2{};
  const double fc = checked(f, center);
  double kronrod = wgk[10] * fc;
  double gauss = 0.0;
  double abs_sum = std::abs(kronrod);
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * xgk[j];
    f1[j] = checked(f, center - dx);
    f2[j] = checked(f, center + dx);
    const double pair = f1[j] + f2[j];
    kronrod += wgk[j] * pair;
    abs_sum += wgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) gauss += wg[j / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = wgk[10] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 10; ++j) {
    asc += wgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }
  const double width = std::abs(half);
  const double result = kronrod * half;
  const double resabs = abs_sum * width;
  const double resasc = asc * width;
  double err = std::abs((kronrod - gauss) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double floor = 50.0 * kEps * resabs;
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(floor, err);
  return {{a, b, result, err}, floor};
}

// Bisects [a, b] until every panel meets its width-proportional share of
// `tol`, appending accepted panels in left-to-right order.
void refine(const std::function<double(double)>& f, double a, double b, double tol,
            std::size_t budget, std::vector<Panel>& out) {
  struct Pending {
    Evaluated eval;
    double tol;
  };
  std::vector<Pending> stack;
  stack.push_back({gauss_kronrod(f, a, b), tol});
  std::size_t evaluated = 1;
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    const Panel& panel = cur.eval.panel;
    const double mid = 0.5 * (panel.a + panel.b);
    const bool too_narrow = !(panel.a < mid && mid < panel.b);
    const bool at_floor = panel.error <= cur.eval.floor;
    if (panel.error <= cur.tol || at_floor || too_narrow) {
      if (too_narrow && !at_floor && panel.error > cur.tol) {
        throw Error(ErrorKind::tolerance_not_met,
                    "panel collapsed near t = " + std::to_string(mid));
      }
      out.push_back(panel);
      continue;
    }
    if (evaluated + 2 > budget) {
      throw Error(ErrorKind::tolerance_not_met,
                  "panel budget exhausted on [" + std::to_string(a) + ", " + std::to_string(b) +
                      "]");
    }
    evaluated += 2;
    // Right half pushed first so the left half is accepted first.
    const double lo = panel.a;
    const double hi = panel.b;
    const double half_tol = 0.5 * cur.tol;
    stack.push_back({gauss_kronrod(f, mid, hi), half_tol});
    stack.push_back({gauss_kronrod(f, lo, mid), half_tol});
  }
}

std::vector<std::pair<double, double>> initial_pieces(double a, double b,
                                                      std::span<const double> breakpoints,
                                                      double max_width) {
  std::vector<double> cuts{a};
  for (double bp : breakpoints) {
    if (bp > a && bp < b && bp > cuts.back()) cuts.push_back(bp);
  }
  cuts.push_back(b);
  std::vector<std::pair<double, double>> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    const double len = hi - lo;
    std::size_t parts = 1;
    if (std::isfinite(max_width) && len > max_width) {
      parts = static_cast<std::size_t>(std::ceil(len / max_width));
    }
    for (std::size_t k = 0; k < parts; ++k) {
      const double p0 = (k == 0) ? lo : lo + len * static_cast<double>(k) / parts;
      const double p1 = (k + 1 == parts) ? hi : lo + len * static_cast<double>(k + 1) / parts;
      pieces.emplace_back(p0, p1);
    }
  }
  return pieces;
}

}  // namespace

const char* to_string(Backend backend) {
  return backend == Backend::real ? "real" : "synthetic";
}

std::vector<Panel> adaptive_panels(const std::function<double(double)>& f, double a, double b,
                                   double tol, std::span<const double> breakpoints,
                                   const PanelPolicy& policy) {
  if (!(a <= b)) throw Error(ErrorKind::domain, "integrate_adaptive: requires a <= b");
  if (!(tol > 0.0)) throw Error(ErrorKind::domain, "integrate_adaptive: tol must be positive");
  if (a == b) return {};
  const auto pieces = initial_pieces(a, b, breakpoints, policy.max_width);
  if (pieces.size() > policy.max_panels) {
    throw Error(ErrorKind::tolerance_not_met, "initial partition exceeds the panel budget");
  }
  const double total = b - a;
  const std::size_t per_piece_budget =
      std::max<std::size_t>(64, policy.max_panels / std::max<std::size_t>(1, pieces.size()));

  auto run_range = [&](std::size_t first, std::size_t last, std::vector<Panel>& out) {
    for (std::size_t i = first; i < last; ++i) {
      const auto [lo, hi] = pieces[i];
      refine(f, lo, hi, tol * (hi - lo) / total, per_piece_budget, out);
    }
  };

  const std::size_t workers =
      std::clamp<std::size_t>(policy.workers, 1, std::max<std::size_t>(1, pieces.size()));
  if (workers == 1) {
    std::vector<Panel> out;
    out.reserve(pieces.size());
    run_range(0, pieces.size(), out);
    return out;
  }

  std::vector<std::vector<Panel>> chunks(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    const std::size_t per = (pieces.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t first = std::min(pieces.size(), w * per);
      const std::size_t last = std::min(pieces.size(), first + per);
      threads.emplace_back([&, w, first, last] {
        try {
          run_range(first, last, chunks[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Panel> out;
  for (auto& chunk : chunks) out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

MomentIntegralResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                        double b, double tol,
                                        std::span<const double> breakpoints,
                                        const PanelPolicy& policy) {
  const auto panels = adaptive_panels(f, a, b, tol, breakpoints, policy);
  MomentIntegralResult result;
  result.lower = a;
  result.upper = b;
  result.panels_used = panels.size();
  for (const Panel& p : panels) {
    result.value += p.value;
    result.abs_error_estimate += p.error;
  }
  if (result.abs_error_estimate > tol) {
    // Only reachable when panels were accepted at their rounding floor.
    throw Error(ErrorKind::tolerance_not_met,
                "error estimate " + std::to_string(result.abs_error_estimate) +
                    " exceeds tolerance " + std::to_string(tol));
  }
  return result;
}

void kronrod_nodes(double a, double b, std::span<double, 21> nodes,
                   std::span<double, 21> weights) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (std::size_t j = 0; j < 10; ++j) {
    nodes[j] = center - half * xgk[j];
    weights[j] = half * wgk[j];
    nodes[20 - j] = center + half * xgk[j];
    weights[20 - j] = half * wgk[j];
  }
  nodes[10] = center;
  weights[10] = half * wgk[10];
}

}  // namespace ladderlab
