#include <doctest.h>

#include <numeric>

#include "qsim/operations.hpp"
#include "test_util.hpp"

using namespace qsim;
using test::approx;
using test::error_kind;
using test::projector;

namespace {

const double s2 = 1. / std::sqrt(2.);

Channel dephasing() {
  return Channel{projector(mket({0})), projector(mket({1}))};
}

// Every subset of {0, ..., n-1} in every order is too many; subsets in
// ascending and reversed order cover the tensor-order handling.
std::vector<std::vector<idx>> subsets(idx n) {
  std::vector<std::vector<idx>> result;
  for (idx mask = 1; mask < (idx{1} << n); ++mask) {
    std::vector<idx> s;
    for (idx k = 0; k < n; ++k)
      if (mask & (idx{1} << k)) s.push_back(k);
    result.push_back(s);
    if (s.size() > 1) result.emplace_back(s.rbegin(), s.rend());
  }
  return result;
}

idx total(const std::vector<idx>& dims) {
  return std::accumulate(dims.begin(), dims.end(), idx{1}, std::multiplies<>());
}

}  // namespace

TEST_CASE("Channel and Permutation construction") {
  CHECK(dephasing().is_cptp());
  CHECK(dephasing().dim() == 2);
  CHECK_FALSE(Channel{gates().H * 2.}.is_cptp());
  CHECK(error_kind([] { Channel(std::vector<cmat>{}); }) == ErrorKind::ZERO_SIZE);
  CHECK(error_kind([] { Channel{cmat(2, 3)}; }) == ErrorKind::MATRIX_NOT_SQUARE);
  CHECK(error_kind([] { Channel{cmat::Identity(2, 2), cmat::Identity(3, 3)}; }) ==
        ErrorKind::DIMS_MISMATCH_MATRIX);

  CHECK_NOTHROW(Permutation{2, 0, 1});
  CHECK(error_kind([] { Permutation{0, 0}; }) == ErrorKind::PERM_INVALID);
  CHECK(error_kind([] { Permutation{1, 2}; }) == ErrorKind::PERM_INVALID);
}

TEST_CASE("apply examples") {
  const auto& gt = gates();
  CHECK(approx(apply(bell00(), gt.X, {1}, {2, 2}),
               (ket(4) << 0., s2, s2, 0.).finished(), 1e-15));
  Rng rng(1);
  const ket psi = rand_ket(12, rng);
  CHECK(apply(psi, cmat::Identity(3, 3), {1}, {2, 3, 2}) == cmat(psi));
  CHECK(apply(mket({1, 0}), gt.X, {0}, {2, 2}) == cmat(mket({0, 0})));

  const cmat rho = projector(psi);
  CHECK(approx(apply(rho, gt.X, {2}, {2, 3, 2}),
               projector(apply(psi, gt.X, {2}, {2, 3, 2})), 1e-14));
}

TEST_CASE("apply errors") {
  const auto& gt = gates();
  CHECK(error_kind([] { apply(cmat(), cmat::Identity(2, 2), {0}, {2}); }) ==
        ErrorKind::ZERO_SIZE);
  CHECK(error_kind([&] { apply(bell00(), gt.X, {2}, {2, 2}); }) ==
        ErrorKind::SUBSYS_MISMATCH_DIMS);
  CHECK(error_kind([&] { apply(bell00(), gt.X, {0, 0}, {2, 2}); }) ==
        ErrorKind::SUBSYS_MISMATCH_DIMS);
  CHECK(error_kind([&] { apply(bell00(), gt.CNOT, {0}, {2, 2}); }) ==
        ErrorKind::DIMS_MISMATCH_MATRIX);
  CHECK(error_kind([&] { apply(bell00(), gt.X, {0}, {2, 3}); }) ==
        ErrorKind::DIMS_MISMATCH_MATRIX);
  CHECK(error_kind([&] { apply(cmat(4, 2), gt.X, {0}, {2, 2}); }) ==
        ErrorKind::NOT_SQUARE_NOR_KET);
}

TEST_CASE("apply matches the embed-then-multiply oracle") {
  Rng rng(17);
  const std::vector<std::vector<idx>> all_dims{
      {2, 2}, {3, 2}, {2, 3, 2}, {3, 3, 2}, {2, 2, 2, 2}, {3, 2, 3, 2}};
  for (const auto& dims : all_dims)
    for (const auto& subsys : subsets(dims.size())) {
      idx dsub = 1;
      for (idx k : subsys) dsub *= dims[k];
      const cmat U = rand_unitary(dsub, rng);
      const cmat full = test::embed_operator(U, subsys, dims);
      const ket psi = rand_ket(total(dims), rng);
      REQUIRE(approx(apply(psi, U, subsys, dims), full * psi, 1e-12));
      const cmat rho = rand_rho(total(dims), rng);
      REQUIRE(approx(apply(rho, U, subsys, dims), full * rho * full.adjoint(),
                     1e-12));
    }
}

TEST_CASE("apply preserves the norm of random kets") {
  Rng rng(8);
  for (idx n = 1; n <= 5; ++n) {
    const Dims dims = Dims::uniform(n, 2);
    for (idx k = 0; k < n; ++k) {
      const ket psi = rand_ket(dims.total(), rng);
      const cmat out = apply(psi, rand_unitary(2, rng), {k}, dims);
      CHECK(std::abs(out.norm() - 1.) <= 1e-10);
    }
  }
}

TEST_CASE("apply_ctrl examples") {
  const auto& gt = gates();
  Rng rng(4);
  const cmat U = rand_unitary(2, rng);
  CHECK(approx(apply_ctrl(mket({1, 0}), U, {0}, {1}, {2, 2}),
               kron(states().z1, U * states().z0), 1e-15));
  CHECK(apply_ctrl(mket({0, 0}), U, {0}, {1}, {2, 2}) == cmat(mket({0, 0})));
  // CNOT maps bell00 to (|00> + |10>)/√2 = |+>|0>.
  CHECK(approx(apply_ctrl(bell00(), gt.X, {0}, {1}, {2, 2}),
               (ket(4) << s2, 0., s2, 0.).finished(), 1e-15));
  CHECK(approx(apply_ctrl(bell00(), gt.X, {0}, {1}, {2, 2}),
               kron(states().x0, states().z0), 1e-15));
  CHECK(error_kind([&] { apply_ctrl(bell00(), gt.X, {0}, {0}, {2, 2}); }) ==
        ErrorKind::SUBSYS_MISMATCH_DIMS);
  CHECK(error_kind([&] {
          apply_ctrl(mket({0, 0, 0}, {2, 3, 2}), gt.X, {0, 1}, {2}, {2, 3, 2});
        }) == ErrorKind::SUBSYS_MISMATCH_DIMS);
  CHECK(apply_ctrl(mket({0, 1}), gt.X, {}, {1}, {2, 2}) == cmat(mket({0, 0})));
}

TEST_CASE("apply_ctrl agrees with the full controlled gate") {
  Rng rng(21);
  for (idx d = 2; d <= 3; ++d)
    for (idx n = 2; n <= 3; ++n) {
      const Dims dims = Dims::uniform(n, d);
      const std::vector<idx> all = [&] {
        std::vector<idx> v(n);
        std::iota(v.begin(), v.end(), idx{0});
        return v;
      }();
      const cmat U = rand_unitary(d, rng);
      const std::vector<idx> ctrl{n - 1}, target{0};
      const cmat G = ctrl_gate(U, ctrl, target, n, d);
      const ket psi = rand_ket(dims.total(), rng);
      CHECK(approx(apply_ctrl(psi, U, ctrl, target, dims),
                   apply(psi, G, all, dims), 1e-12));
      const cmat rho = rand_rho(dims.total(), rng);
      CHECK(approx(apply_ctrl(rho, U, ctrl, target, dims),
                   G * rho * G.adjoint(), 1e-12));
    }
  // Mixed dimensions: qubit control, qutrit target.
  const cmat U3 = rand_unitary(3, rng);
  const ket psi = kron(states().z1, Eigen::VectorXcd::Unit(3, 2).eval());
  CHECK(approx(apply_ctrl(psi, U3, {0}, {1}, {2, 3}),
               kron(states().z1, U3.col(2)), 1e-14));
}

TEST_CASE("apply_channel examples") {
  const cmat bell = projector(bell00());
  const cmat expected = (projector(mket({0, 0})) + projector(mket({1, 1}))) / 2.;
  CHECK(approx(apply_channel(bell, dephasing(), {0}, {2, 2}), expected, 1e-15));
  CHECK(approx(apply_channel(bell, Channel{cmat::Identity(2, 2)}, {1}, {2, 2}),
               bell, 1e-15));
  Rng rng(9);
  const cmat U = rand_unitary(4, rng);
  const cmat rho = rand_rho(4, rng);
  CHECK(approx(apply_channel(rho, Channel{U}, {0, 1}, {2, 2}),
               U * rho * U.adjoint(), 1e-14));

  CHECK(error_kind([&] { apply_channel(cmat(), dephasing(), {0}, {2}); }) ==
        ErrorKind::ZERO_SIZE);
  CHECK(error_kind([&] { apply_channel(bell00(), dephasing(), {0}, {2, 2}); }) ==
        ErrorKind::MATRIX_NOT_SQUARE);
  CHECK(error_kind([&] { apply_channel(bell, dephasing(), {0, 1}, {2, 2}); }) ==
        ErrorKind::DIMS_MISMATCH_MATRIX);
  CHECK(error_kind([&] { apply_channel(bell, dephasing(), {2}, {2, 2}); }) ==
        ErrorKind::SUBSYS_MISMATCH_DIMS);
}

TEST_CASE("CPTP channels preserve trace, Hermiticity and positivity") {
  Rng rng(33);
  for (int t = 0; t < 10; ++t) {
    const Channel ks = test::random_channel(2 + t % 2, 1 + t % 4, rng);
    const Dims dims{static_cast<idx>(2 + t % 2), 2};
    const cmat rho = rand_rho(dims.total(), rng);
    const cmat out = apply_channel(rho, ks, {0}, dims);
    CHECK(std::abs(out.trace() - 1.) <= 1e-10);
    CHECK(hermiticity_defect(out) <= 1e-10);
    CHECK(hevals((out + out.adjoint()) / 2.).front() >= -1e-10);
  }
}

TEST_CASE("kraus2super examples") {
  CHECK(kraus2super(Channel{cmat::Identity(2, 2)}) == cmat::Identity(4, 4));
  const auto& gt = gates();
  CHECK(kraus2super(Channel{gt.X}) == kron(gt.X, gt.X));
  cmat diag = cmat::Zero(4, 4);
  diag(0, 0) = diag(3, 3) = 1.;
  CHECK(kraus2super(dephasing()) == diag);
}

TEST_CASE("superoperator acts on column-stacked density matrices") {
  Rng rng(44);
  for (idx D = 2; D <= 3; ++D)
    for (idx nk = 1; nk <= 3; ++nk) {
      const Channel ks = test::random_channel(D, nk, rng);
      const cmat rho = rand_rho(D, rng);
      const cmat via_super = unvec(kraus2super(ks) * vec(rho), D, D);
      CHECK(approx(via_super, apply_channel(rho, ks, {0}, Dims{D}), 1e-10));
    }
}

TEST_CASE("kraus2choi examples") {
  cmat corners = cmat::Zero(4, 4);
  corners(0, 0) = corners(0, 3) = corners(3, 0) = corners(3, 3) = 1.;
  CHECK(kraus2choi(Channel{cmat::Identity(2, 2)}) == corners);
  cmat diag = cmat::Zero(4, 4);
  diag(0, 0) = diag(3, 3) = 1.;
  CHECK(kraus2choi(dephasing()) == diag);

  Rng rng(12);
  for (int t = 0; t < 5; ++t) {
    const Channel ks = test::random_channel(2, 1 + t % 4, rng);
    const cmat J = kraus2choi(ks);
    CHECK(std::abs(J.trace() - 2.) <= 1e-10);
    CHECK(hermiticity_defect(J) <= 1e-12);
    CHECK(hevals(J).front() >= -1e-10);
  }
}

TEST_CASE("Choi matrix equals Σ |b><b'| ⊗ Λ(|b><b'|)") {
  Rng rng(13);
  const idx D = 3;
  const Channel ks = test::random_channel(D, 2, rng);
  cmat J = cmat::Zero(D * D, D * D);
  for (idx b = 0; b < D; ++b)
    for (idx bp = 0; bp < D; ++bp) {
      cmat E = cmat::Zero(D, D);
      E(b, bp) = 1.;
      cmat out = cmat::Zero(D, D);
      for (const auto& K : ks) out += K * E * K.adjoint();
      J += kron(E, out);
    }
  CHECK(approx(kraus2choi(ks), J, 1e-12));
}

TEST_CASE("choi2kraus") {
  const Channel id = choi2kraus(kraus2choi(Channel{cmat::Identity(2, 2)}));
  REQUIRE(id.size() == 1);
  CHECK(test::approx_up_to_phase(id.kraus()[0], cmat::Identity(2, 2), 1e-12));

  // Compare channel action on the matrix-unit basis, not operator lists.
  const Channel deph = choi2kraus(kraus2choi(dephasing()));
  CHECK(deph.size() == 2);
  for (idx b = 0; b < 2; ++b)
    for (idx bp = 0; bp < 2; ++bp) {
      cmat E = cmat::Zero(2, 2);
      E(b, bp) = 1.;
      CHECK(approx(apply_channel(E, deph, {0}, {2}),
                   apply_channel(E, dephasing(), {0}, {2}), 1e-12));
    }

  Rng rng(14);
  for (int t = 0; t < 10; ++t) {
    const idx D = 2 + t % 2;
    const Channel ks = test::random_channel(D, 1 + t % 4, rng);
    const cmat J = kraus2choi(ks);
    const Channel back = choi2kraus(J);
    CHECK(approx(kraus2choi(back), J, 1e-9));
    const cmat rho = rand_rho(D, rng);
    CHECK(approx(apply_channel(rho, back, {0}, Dims{D}),
                 apply_channel(rho, ks, {0}, Dims{D}), 1e-9));
  }

  CHECK(error_kind([] { choi2kraus(cmat(4, 2)); }) == ErrorKind::MATRIX_NOT_SQUARE);
  CHECK(error_kind([] { choi2kraus(cmat::Identity(3, 3)); }) ==
        ErrorKind::DIMS_INVALID);
  CHECK(error_kind([] { choi2kraus(-cmat::Identity(4, 4)); }) ==
        ErrorKind::DIMS_INVALID);
  cmat nonherm = cmat::Identity(4, 4);
  nonherm(0, 1) = 1.;
  CHECK(error_kind([&] { choi2kraus(nonherm); }) == ErrorKind::DIMS_INVALID);
}

TEST_CASE("ptrace examples") {
  const cmat bell = projector(bell00());
  CHECK(approx(ptrace(bell, {1}, {2, 2}), cmat::Identity(2, 2) / 2., 1e-15));
  CHECK(approx(ptrace(bell00(), {0}, {2, 2}), cmat::Identity(2, 2) / 2., 1e-15));

  Rng rng(15);
  const cmat rhoA = rand_rho(3, rng), rhoB = rand_rho(2, rng);
  CHECK(approx(ptrace(kron(rhoA, rhoB), {1}, {3, 2}), rhoA, 1e-12));
  CHECK(approx(ptrace(kron(rhoA, rhoB), {0}, {3, 2}), rhoB, 1e-12));
  CHECK(ptrace(bell, {}, {2, 2}) == bell);
  CHECK(approx(ptrace(bell, {0, 1}, {2, 2}), cmat::Ones(1, 1), 1e-15));

  CHECK(error_kind([] { ptrace(cmat(), {0}, {2}); }) == ErrorKind::ZERO_SIZE);
  CHECK(error_kind([&] { ptrace(bell, {2}, {2, 2}); }) ==
        ErrorKind::SUBSYS_MISMATCH_DIMS);
  CHECK(error_kind([] { ptrace(cmat(4, 3), {0}, {2, 2}); }) ==
        ErrorKind::NOT_SQUARE_NOR_KET);
}

TEST_CASE("ptrace keeps the relative order of the remaining subsystems") {
  Rng rng(16);
  const cmat a = rand_rho(2, rng), b = rand_rho(3, rng), c = rand_rho(2, rng);
  const cmat abc = kron({a, b, c});
  CHECK(approx(ptrace(abc, {1}, {2, 3, 2}), kron(a, c), 1e-12));
  CHECK(approx(ptrace(abc, {0}, {2, 3, 2}), kron(b, c), 1e-12));
  CHECK(approx(ptrace(abc, {2, 0}, {2, 3, 2}), b, 1e-12));
  for (const auto& subsys : subsets(3)) {
    const cmat rho = rand_rho(12, rng);
    CHECK(std::abs(ptrace(rho, subsys, {2, 3, 2}).trace() - rho.trace()) <= 1e-12);
  }
}

TEST_CASE("ptranspose") {
  const cmat bell = projector(bell00());
  const auto values = hevals(ptranspose(bell, {0}, {2, 2}));
  const std::vector<double> expected{-0.5, 0.5, 0.5, 0.5};
  for (idx k = 0; k < 4; ++k) CHECK(std::abs(values[k] - expected[k]) < 1e-12);

  Rng rng(18);
  const cmat rho = rand_rho(12, rng);
  CHECK(ptranspose(rho, {0, 1, 2}, {2, 3, 2}) == cmat(rho.transpose()));
  CHECK(ptranspose(rho, {}, {2, 3, 2}) == rho);
  const cmat diag = rho.diagonal().asDiagonal();
  CHECK(ptranspose(diag, {1}, {2, 3, 2}) == diag);

  // Explicit digit swap oracle.
  const std::vector<idx> dims{2, 3, 2};
  const cmat pt = ptranspose(rho, {1}, dims);
  test::for_each_multiidx(dims, [&](const std::vector<idx>& r) {
    test::for_each_multiidx(dims, [&](const std::vector<idx>& c) {
      std::vector<idx> r2 = r, c2 = c;
      std::swap(r2[1], c2[1]);
      REQUIRE(pt(test::horner(r2, dims), test::horner(c2, dims)) ==
              rho(test::horner(r, dims), test::horner(c, dims)));
    });
  });

  for (const auto& subsys : subsets(3)) {
    const cmat twice = ptranspose(ptranspose(rho, subsys, dims), subsys, dims);
    CHECK(twice == rho);
    CHECK(std::abs(ptranspose(rho, subsys, dims).trace() - rho.trace()) <= 1e-12);
  }
  CHECK(error_kind([&] { ptranspose(rho, {3}, {2, 3, 2}); }) ==
        ErrorKind::SUBSYS_MISMATCH_DIMS);
}

TEST_CASE("syspermute examples") {
  CHECK(syspermute(mket({1, 0}), {1, 0}, {2, 2}) == cmat(mket({0, 1})));
  Rng rng(19);
  const ket psi = rand_ket(12, rng);
  CHECK(syspermute(psi, Permutation::identity(3), {2, 3, 2}) == cmat(psi));
  // Subsystem 0 (dim 2) moves to position 2: output dims [3, 2, 2].
  CHECK(syspermute(mket({1, 2, 0}, {2, 3, 2}), {2, 0, 1}, {2, 3, 2}) ==
        cmat(mket({2, 0, 1}, {3, 2, 2})));
  CHECK(permute_dims({2, 3, 2}, {2, 0, 1}) == Dims{3, 2, 2});

  CHECK(error_kind([] { syspermute(mket({0, 0}), {0, 1, 2}, {2, 2}); }) ==
        ErrorKind::SUBSYS_MISMATCH_DIMS);
  CHECK(error_kind([] { syspermute(cmat(), {0}, {2}); }) == ErrorKind::ZERO_SIZE);
}

TEST_CASE("syspermute matches brute-force digit relocation and composes") {
  Rng rng(20);
  const std::vector<std::vector<idx>> all_dims{{2, 3}, {3, 2, 2}, {2, 3, 2, 3}};
  for (const auto& dims : all_dims)
    for (int t = 0; t < 6; ++t) {
      const Permutation p = rand_perm(dims.size(), rng);
      const Permutation q = rand_perm(dims.size(), rng);
      const ket psi = rand_ket(total(dims), rng);
      const cmat rho = rand_rho(total(dims), rng);
      CHECK(syspermute(psi, p, dims) == test::brute_syspermute(psi, p.values(), dims));
      CHECK(syspermute(rho, p, dims) == test::brute_syspermute(rho, p.values(), dims));

      const Dims pd = permute_dims(dims, p);
      CHECK(syspermute(syspermute(psi, p, dims), q, pd) ==
            syspermute(psi, compose(q, p), dims));
      CHECK(syspermute(syspermute(rho, p, dims), q, pd) ==
            syspermute(rho, compose(q, p), dims));
      CHECK(syspermute(syspermute(rho, p, dims), invperm(p), pd) == rho);
    }
}

TEST_CASE("invperm") {
  CHECK(invperm({0, 1, 2}) == Permutation{0, 1, 2});
  CHECK(invperm({2, 0, 1}) == Permutation{1, 2, 0});
  Rng rng(22);
  for (idx n = 1; n <= 64; ++n) {
    const Permutation p = rand_perm(n, rng);
    const Permutation inv = invperm(p);
    CHECK(invperm(inv) == p);
    for (idx k = 0; k < n; ++k) CHECK(inv[p[k]] == k);
  }
}

TEST_CASE("vec and unvec use column stacking") {
  const cmat A = (cmat(2, 2) << 1., 2., 3., 4.).finished();
  CHECK(vec(A) == (ket(4) << 1., 3., 2., 4.).finished());
  CHECK(unvec(vec(A), 2, 2) == A);
  CHECK(error_kind([&] { unvec(vec(A), 3, 2); }) == ErrorKind::DIMS_MISMATCH_MATRIX);
}
