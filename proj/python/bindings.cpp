#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <map>
#include <string>

#include "qsim/qsim.hpp"

namespace py = pybind11;
using namespace qsim;

namespace {

using carray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

// 1-D arrays are kets; 2-D arrays are matrices.
struct State {
  cmat value;
  bool is_ket;
};

State to_state(const carray& a) {
  if (a.ndim() == 1) {
    cmat m(a.shape(0), 1);
    for (py::ssize_t i = 0; i < a.shape(0); ++i) m(i, 0) = a.at(i);
    return {m, true};
  }
  if (a.ndim() != 2) throw py::value_error("expected a 1-D or 2-D array");
  cmat m(a.shape(0), a.shape(1));
  auto r = a.unchecked<2>();
  for (py::ssize_t i = 0; i < a.shape(0); ++i)
    for (py::ssize_t j = 0; j < a.shape(1); ++j) m(i, j) = r(i, j);
  return {m, false};
}

py::object from_state(const cmat& m, bool is_ket) {
  if (is_ket && m.cols() == 1) return py::cast(ket(m.col(0)));
  return py::cast(m);
}

cmat to_cmat(const carray& a) { return to_state(a).value; }

Channel to_channel(const std::vector<carray>& ks) {
  std::vector<cmat> out;
  out.reserve(ks.size());
  for (const auto& k : ks) out.push_back(to_cmat(k));
  return Channel(out);
}

std::vector<cmat> from_channel(const Channel& ks) {
  return {ks.begin(), ks.end()};
}

}  // namespace

PYBIND11_MODULE(_qsim, m) {
  m.doc() = "Bindings for the qsim C++ library";

  // The module attribute keeps the type alive.
  static PyObject* error =
      py::exception<Exception>(m, "Error", PyExc_RuntimeError).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Exception& e) {
      py::object instance = py::handle(error)(e.what());
      instance.attr("kind") = std::string(kind_name(e.type()));
      instance.attr("where") = e.where();
      PyErr_SetObject(error, instance.ptr());
    }
  });

  py::class_<Rng>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed") = 0)
      .def("seed", &Rng::seed)
      .def("uniform", &Rng::uniform)
      .def("normal", &Rng::normal);

  m.def("kron", [](const std::vector<carray>& ms) {
    std::vector<cmat> xs;
    for (const auto& a : ms) xs.push_back(to_cmat(a));
    return kron(xs);
  });
  m.def("transpose", [](const carray& a) { return transpose(to_cmat(a)); });
  m.def("adjoint", [](const carray& a) { return adjoint(to_cmat(a)); });
  m.def("trace", [](const carray& a) { return trace(to_cmat(a)); });
  m.def("norm", [](const carray& a) { return norm(to_cmat(a)); });
  m.def("hevals", [](const carray& a) { return hevals(to_cmat(a)); });
  m.def("hevects", [](const carray& a) { return hevects(to_cmat(a)); });

  m.def("multiidx_to_n", [](const std::vector<idx>& mi, const std::vector<idx>& dims) {
    return multiidx_to_n(mi, Dims(dims));
  });
  m.def("n_to_multiidx", [](idx n, const std::vector<idx>& dims) {
    return n_to_multiidx(n, Dims(dims));
  });

  m.def("mket",
        [](const std::vector<idx>& digits, std::optional<std::vector<idx>> dims) {
          return dims ? mket(digits, Dims(*dims)) : mket(digits);
        },
        py::arg("digits"), py::arg("dims") = py::none());
  m.def("bell00", &bell00);
  m.def("shor_codeword", &shor_codeword, py::arg("logical") = 0);
  m.def("state", [](const std::string& name) -> ket {
    const auto& s = states();
    const std::map<std::string, const ket*> table{
        {"z0", &s.z0},   {"z1", &s.z1},   {"x0", &s.x0},   {"x1", &s.x1},
        {"b00", &s.b00}, {"b01", &s.b01}, {"b10", &s.b10}, {"b11", &s.b11}};
    const auto it = table.find(name);
    if (it == table.end()) throw py::key_error(name);
    return *it->second;
  }, "Named state: z0, z1, x0, x1, b00, b01, b10 or b11");
  m.def("gate", [](const std::string& name) -> cmat {
    const auto& g = gates();
    const std::map<std::string, const cmat*> table{
        {"Id2", &g.Id2},   {"X", &g.X},       {"Y", &g.Y},     {"Z", &g.Z},
        {"H", &g.H},       {"S", &g.S},       {"T", &g.T},     {"CNOT", &g.CNOT},
        {"CZ", &g.CZ},     {"SWAP", &g.SWAP}, {"TOF", &g.TOF}, {"FRED", &g.FRED}};
    const auto it = table.find(name);
    if (it == table.end()) throw py::key_error(name);
    return *it->second;
  }, "Named qubit gate, e.g. H or CNOT");

  m.def("apply", [](const carray& state, const carray& U,
                    const std::vector<idx>& subsys, const std::vector<idx>& dims) {
    const auto s = to_state(state);
    return from_state(apply(s.value, to_cmat(U), subsys, Dims(dims)), s.is_ket);
  });
  m.def("apply_ctrl", [](const carray& state, const carray& U,
                         const std::vector<idx>& ctrl, const std::vector<idx>& target,
                         const std::vector<idx>& dims) {
    const auto s = to_state(state);
    return from_state(apply_ctrl(s.value, to_cmat(U), ctrl, target, Dims(dims)),
                      s.is_ket);
  });
  m.def("apply_channel", [](const carray& rho, const std::vector<carray>& ks,
                            const std::vector<idx>& subsys,
                            const std::vector<idx>& dims) {
    return apply_channel(to_cmat(rho), to_channel(ks), subsys, Dims(dims));
  });
  m.def("kraus2super",
        [](const std::vector<carray>& ks) { return kraus2super(to_channel(ks)); });
  m.def("kraus2choi",
        [](const std::vector<carray>& ks) { return kraus2choi(to_channel(ks)); });
  m.def("choi2kraus",
        [](const carray& J) { return from_channel(choi2kraus(to_cmat(J))); });
  m.def("ptrace", [](const carray& state, const std::vector<idx>& subsys,
                     const std::vector<idx>& dims) {
    return ptrace(to_cmat(state), subsys, Dims(dims));
  });
  m.def("ptranspose", [](const carray& state, const std::vector<idx>& subsys,
                         const std::vector<idx>& dims) {
    return ptranspose(to_cmat(state), subsys, Dims(dims));
  });
  m.def("syspermute", [](const carray& state, const std::vector<idx>& perm,
                         const std::vector<idx>& dims) {
    const auto s = to_state(state);
    return from_state(syspermute(s.value, Permutation(perm), Dims(dims)), s.is_ket);
  });
  m.def("permute_dims", [](const std::vector<idx>& dims, const std::vector<idx>& perm) {
    return permute_dims(Dims(dims), Permutation(perm)).values();
  });
  m.def("invperm", [](const std::vector<idx>& perm) {
    return invperm(Permutation(perm)).values();
  });

  m.def("measure", [](const carray& state, const carray& basis,
                      const std::vector<idx>& subsys, const std::vector<idx>& dims,
                      Rng& rng) {
    const auto s = to_state(state);
    const auto r = measure(s.value, to_cmat(basis), subsys, Dims(dims), rng);
    py::list post;
    for (const auto& st : r.states) {
      if (st.size() == 0)
        post.append(py::none());
      else
        post.append(from_state(st, s.is_ket));
    }
    return py::make_tuple(r.result, r.probs, post);
  }, "Returns (result, probs, states); zero-probability outcomes give None.");

  m.def("shannon", &shannon);
  m.def("entropy", [](const carray& rho) { return entropy(to_cmat(rho)); });
  m.def("qmutualinfo", [](const carray& rho, const std::vector<idx>& A,
                          const std::vector<idx>& B, const std::vector<idx>& dims) {
    return qmutualinfo(to_cmat(rho), A, B, Dims(dims));
  });

  m.def("rand_unitary", &rand_unitary);
  m.def("rand_ket", &rand_ket);
  m.def("rand_rho", &rand_rho);
  m.def("rand_perm", [](idx n, Rng& rng) { return rand_perm(n, rng).values(); });

  m.def("save", [](const carray& A, const std::filesystem::path& path) {
    save(to_cmat(A), path);
  });
  m.def("load", [](const std::filesystem::path& path) { return load(path); });
  m.def("format_matrix", [](const carray& A, idx precision) {
    return format_matrix(to_cmat(A), precision);
  }, py::arg("A"), py::arg("precision") = default_precision);
}
