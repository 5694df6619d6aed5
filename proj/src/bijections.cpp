#include "rrcomb/bijections.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "rrcomb/errors.hpp"

namespace rrcomb {

namespace {

std::vector<int> zero_extended(const Partition& p, int len) {
  std::vector<int> out(static_cast<std::size_t>(len), 0);
  std::copy_n(p.parts().begin(), std::min(len, p.length()), out.begin());
  return out;
}

void check_psi_parameters(int m, int r) {
  if (!psi_parameters_valid(m, r)) {
    throw DomainError("psi is defined only for m, r > 0 or m = 0, r >= 0 (got m = " +
                      std::to_string(m) + ", r = " + std::to_string(r) + ")");
  }
}

}  // namespace

FiveTuple phi_split(const DurfeeDecomposition& d, Mutation mutation) {
  if (d.m != 0) throw DomainError("phi works with Durfee squares (m = 0)");
  validate(d);
  const int s = d.s;
  const int t = d.t;
  const int gap = s - t;

  // Rows alpha_{s-t-beta_j+j}, j = 1..t. The index is strictly increasing in j.
  const auto alpha = zero_extended(d.alpha, s);
  std::vector<bool> taken(static_cast<std::size_t>(s), false);
  std::vector<int> nu;
  int previous = 0;
  for (int j = 1; j <= t; ++j) {
    const int idx = gap - d.beta.part(j) + j;
    if (idx <= previous || idx > s) throw InternalError("phi: removal indices not increasing");
    previous = idx;
    taken[static_cast<std::size_t>(idx - 1)] = true;
    nu.push_back(alpha[static_cast<std::size_t>(idx - 1)]);
  }
  std::vector<int> pi;
  for (int i = 0; i < s; ++i) {
    if (!taken[static_cast<std::size_t>(i)]) pi.push_back(alpha[static_cast<std::size_t>(i)]);
  }

  FiveTuple f;
  f.mu = d.beta;
  f.nu = Partition::from_multiset(std::move(nu));
  f.pi = Partition::from_multiset(std::move(pi));

  const Partition gamma_conj = conjugate(d.gamma);
  std::vector<int> rho;
  std::vector<int> sigma;
  for (int j = 1; j <= t; ++j) {
    const int g = gamma_conj.part(j);
    int k = 0;
    if (mutation != Mutation::phi_skip_k_step) {
      for (k = gap; k > 0; --k) {
        if (g - k >= f.pi.part(gap - k + 1)) break;
      }
    }
    rho.push_back(k);
    sigma.push_back(g - k);
  }
  f.rho = Partition::from_multiset(std::move(rho));
  f.sigma = Partition::from_multiset(std::move(sigma));
  return f;
}

DurfeeDecomposition phi_assemble(const FiveTuple& f, int s, int t) {
  DurfeeDecomposition d;
  d.m = 0;
  d.s = s;
  d.t = t;
  d.gamma = conjugate(sum_partitions(f.nu, f.mu));
  d.alpha = union_partitions(f.sigma, f.pi);
  d.beta = f.rho;
  try {
    validate(d);
  } catch (const ValidationError& e) {
    throw InternalError(std::string("phi: assembled triple does not fit: ") + e.what());
  }
  return d;
}

Partition phi(const Partition& lambda, Mutation mutation) {
  const auto d = decompose(lambda, 0);
  if (!d) {
    throw DomainError("phi is undefined on the Rogers-Ramanujan partition " + to_string(lambda));
  }
  return recompose(phi_assemble(phi_split(*d, mutation), d->s, d->t));
}

bool psi_parameters_valid(int m, int r) { return (m > 0 && r > 0) || (m == 0 && r >= 0); }

int psi_k1(const DurfeeDecomposition& d, int r, Mutation mutation) {
  const int gap = d.s - d.t;
  const int g = d.gamma.length();
  const auto admissible = [&](int k) { return g - r - k >= d.alpha.part(gap - k + 1); };
  if (mutation == Mutation::psi_k1_ascending) {
    for (int k = 0; k <= gap; ++k) {
      if (admissible(k)) return k;
    }
  } else {
    for (int k = gap; k >= 0; --k) {
      if (admissible(k)) return k;
    }
  }
  throw DomainError("psi: no admissible k_1 (input outside the domain)");
}

Partition psi(const Partition& lambda, int m, int r, Mutation mutation) {
  check_psi_parameters(m, r);
  const auto d = decompose(lambda, m);
  if (!d) throw DomainError("psi_{0,r} is undefined on the Rogers-Ramanujan partition " + to_string(lambda));
  const int rank = rank_2m(*d);
  if (rank > -r) {
    throw DomainError("psi_{" + std::to_string(m) + "," + std::to_string(r) + "} needs rank <= " +
                      std::to_string(-r) + ", got " + std::to_string(rank));
  }
  if (d->s - m < 1 || d->t - m < 1) throw InternalError("psi: domain element with a width-0 rectangle");

  const int k1 = psi_k1(*d, r, mutation);
  const int new_alpha_part = d->gamma.length() - r - k1;

  DurfeeDecomposition out;
  out.m = m + 2;
  out.s = d->s + 1;
  out.t = d->t + 1;
  out.alpha = Partition::from_multiset([&] {
    auto v = d->alpha.vec();
    v.push_back(new_alpha_part);
    return v;
  }());
  out.beta = Partition::from_multiset([&] {
    auto v = d->beta.vec();
    v.push_back(k1);
    return v;
  }());
  out.gamma = remove_first_column(d->gamma);
  try {
    return recompose(out);
  } catch (const ValidationError& e) {
    throw InternalError(std::string("psi: image does not fit: ") + e.what());
  }
}

Partition psi_inverse(const Partition& lambda_hat, int m, int r) {
  check_psi_parameters(m, r);
  const auto dh = decompose(lambda_hat, m + 2);
  if (!dh) throw InternalError("psi_inverse: (m+2)-decomposition missing");
  const int rank = rank_2m(*dh);
  if (rank < -r) {
    throw DomainError("psi_{" + std::to_string(m) + "," + std::to_string(r) + "}^{-1} needs rank >= " +
                      std::to_string(-r) + ", got " + std::to_string(rank));
  }
  const int b1 = dh->beta.part(1);
  const int idx = dh->s - dh->t - b1 + 1;

  auto alpha = zero_extended(dh->alpha, dh->s);
  const int a = alpha[static_cast<std::size_t>(idx - 1)];
  alpha.erase(alpha.begin() + (idx - 1));
  auto beta = zero_extended(dh->beta, dh->t);
  beta.erase(beta.begin());

  std::vector<int> gamma_conj = conjugate(dh->gamma).vec();
  if (a + b1 + r > 0) gamma_conj.insert(gamma_conj.begin(), a + b1 + r);

  DurfeeDecomposition d;
  d.m = m;
  d.s = dh->s - 1;
  d.t = dh->t - 1;
  d.alpha = Partition::from_multiset(std::move(alpha));
  d.beta = Partition::from_multiset(std::move(beta));
  try {
    d.gamma = conjugate(Partition(std::move(gamma_conj)));
    return recompose(d);
  } catch (const ValidationError& e) {
    throw DomainError(std::string("psi_inverse: input not in the codomain: ") + e.what());
  }
}

}  // namespace rrcomb
