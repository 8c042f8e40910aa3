#include "avoid/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "avoid/error.hpp"

namespace avoid {

namespace {

double log_base(std::int64_t m, std::int64_t x) {
  return std::log(static_cast<double>(x)) / std::log(static_cast<double>(m));
}

void require_size(std::int64_t m, std::int64_t r, std::int64_t limit) {
  if (m < 2) throw Error(Errc::invalid_modulus, std::to_string(m));
  if (r < 1 || r > limit) {
    throw Error(Errc::invalid_argument, "set size " + std::to_string(r) + " outside [1, " + std::to_string(limit) + "]");
  }
}

}  // namespace

double gamma_ruzsa(std::int64_t m, unsigned k, std::int64_t r) {
  if (k < 2) throw Error(Errc::invalid_argument, "k must be at least 2");
  require_size(m, r, m);
  return (k - 1 + log_base(m, r)) / k;
}

double gamma_chain(std::int64_t m, unsigned k, std::span<const std::int64_t> preperiod_sizes,
                   std::span<const std::int64_t> period_sizes) {
  if (k < 2) throw Error(Errc::invalid_argument, "k must be at least 2");
  if (period_sizes.empty()) throw Error(Errc::invalid_argument, "period must be non-empty");
  const double kk = k;
  double sum = 0.0;
  double scale = 1.0 / kk;
  for (const auto r : preperiod_sizes) {
    require_size(m, r, m);
    sum += log_base(m, r) * scale;
    scale /= kk;
  }
  double block = 0.0;
  for (const auto r : period_sizes) {
    require_size(m, r, m);
    block += log_base(m, r) * scale;
    scale /= kk;
  }
  const double ratio = std::pow(kk, -static_cast<double>(period_sizes.size()));
  return (kk - 1.0) * (sum + block / (1.0 - ratio));
}

double gamma_chain_pair(std::int64_t m, unsigned k, std::int64_t r1, std::int64_t r2) {
  if (k < 2) throw Error(Errc::invalid_argument, "k must be at least 2");
  require_size(m, r1, m);
  require_size(m, r2, m);
  const double kk = k;
  return (kk - 1.0) / kk + log_base(m, r1) / (kk + 1.0) + log_base(m, r2) / (kk * (kk + 1.0));
}

double gamma_chain_partial(std::int64_t m, unsigned k, std::span<const std::int64_t> preperiod_sizes,
                           std::span<const std::int64_t> period_sizes, std::size_t terms) {
  if (k < 2 || period_sizes.empty()) throw Error(Errc::invalid_argument, "k >= 2 and a non-empty period");
  double sum = 0.0;
  double scale = 1.0 / k;
  for (std::size_t n = 0; n < terms; ++n) {
    const auto r = n < preperiod_sizes.size()
                       ? preperiod_sizes[n]
                       : period_sizes[(n - preperiod_sizes.size()) % period_sizes.size()];
    require_size(m, r, m);
    sum += log_base(m, r) * scale;
    scale /= k;
  }
  return (k - 1.0) * sum;
}

std::size_t chain_terms_for_epsilon(double epsilon) {
  if (!(epsilon > 0.0)) throw Error(Errc::invalid_argument, "epsilon must be positive");
  // sum_{j >= n} 2^-j = 2^(1-n)
  std::size_t n = 0;
  while (std::ldexp(1.0, 1 - static_cast<int>(n)) > epsilon) ++n;
  return n;
}

double gamma_inhom(std::int64_t m, unsigned d, std::int64_t r) {
  if (d < 2) throw Error(Errc::invalid_argument, "degree must be at least 2");
  require_size(m, r, m);
  return (d - 1 + log_base(m, r)) / d;
}

double gamma_multivariate(std::int64_t m, unsigned k, std::int64_t rp) {
  if (k < 2) throw Error(Errc::invalid_argument, "k must be at least 2");
  if (m < 2) throw Error(Errc::invalid_modulus, std::to_string(m));
  if (rp < 1 || std::log(static_cast<double>(rp)) > k * std::log(static_cast<double>(m)) + 1e-12) {
    throw Error(Errc::invalid_argument, "|R'| outside [1, m^k]");
  }
  return log_base(m, rp) / k;
}

std::optional<double> greedy_exponent(double forbidden_density) {
  const double e = 1.0 - forbidden_density;
  if (e <= 0.0) return std::nullopt;
  return e;
}

std::string render_report(const ExponentReport& report) {
  std::ostringstream out;
  out << report.instance << '\n';
  std::size_t width = 0;
  for (const auto& row : report.rows) width = std::max(width, row.label.size());
  for (const auto& row : report.rows) {
    out << "  " << std::left << std::setw(static_cast<int>(width)) << row.label << "  ";
    if (row.value) {
      out << std::fixed << std::setprecision(6) << *row.value;
    } else {
      out << "sub-polynomial";
    }
    if (!row.note.empty()) out << "  (" << row.note << ')';
    out << '\n';
  }
  return out.str();
}

}  // namespace avoid

#include "avoid/constructions.hpp"

namespace avoid {

double exponent_slack(unsigned digits) {
  if (digits == 0) throw Error(Errc::invalid_argument, "digit length must be positive");
  return 4.0 / digits;
}

ExponentReport compare_report(const ConstructedSet& set) {
  const auto& spec = set.spec();
  ExponentReport report{spec.to_string(), {}};
  const double observed = set.size() <= 1 || set.N() <= 1
                              ? 0.0
                              : std::log(static_cast<double>(set.size())) / std::log(static_cast<double>(set.N()));

  switch (spec.variant) {
    case Variant::ruzsa_power:
    case Variant::inhomogeneous_poly: {
      const unsigned d = spec.f->degree();
      const auto r = static_cast<std::int64_t>(spec.residues->size());
      report.rows.push_back({"greedy", greedy_exponent(1.0 / d), "1 - 1/d"});
      const double claimed = spec.variant == Variant::ruzsa_power ? gamma_ruzsa(spec.m, spec.k, r)
                                                                  : gamma_inhom(spec.m, d, r);
      report.rows.push_back({"claimed", claimed, "(d-1+log_m|R|)/d"});
      break;
    }
    case Variant::nonlinear_roth: {
      std::vector<std::int64_t> pre, period;
      for (const auto& s : spec.chain->preperiod()) pre.push_back(static_cast<std::int64_t>(s.size()));
      for (const auto& s : spec.chain->period()) period.push_back(static_cast<std::int64_t>(s.size()));
      report.rows.push_back({"greedy", greedy_exponent(1.0 / spec.k), "k-th power free differences"});
      report.rows.push_back({"claimed", gamma_chain(spec.m, spec.k, pre, period),
                             "target gamma - eps(Y), eps = " + std::to_string(exponent_slack(spec.digits))});
      break;
    }
    case Variant::multivariate_homogeneous: {
      const double density = static_cast<double>(spec.form->arity()) / spec.k;
      report.rows.push_back({"greedy", greedy_exponent(density), "image has ~N^min(n/k,1) values"});
      report.rows.push_back({"claimed", gamma_multivariate(spec.m, spec.k, static_cast<std::int64_t>(spec.residues->size())),
                             "log_m|R'|/k"});
      break;
    }
    case Variant::greedy:
      break;
  }
  report.rows.push_back({"observed", observed, "ln|A|/ln N"});
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return a.value.value_or(-1.0) < b.value.value_or(-1.0);
  });
  return report;
}

}  // namespace avoid
