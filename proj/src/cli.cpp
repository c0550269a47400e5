#include "qsim/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <string>

#include "qsim/qsim.hpp"

namespace qsim::cli {

namespace {

struct Options {
  std::uint64_t seed = 0;
  idx precision = default_precision;
};

class Demo {
 public:
  Demo(const Options& opts, std::ostream& out)
      : out_(out), precision_(opts.precision), rng_(opts.seed) {}

  void minimal() {
    out_ << "Hello Quantum++!\n";
    show("This is the |0> state:", states().z0);
  }

  void gates_states() {
    ket psi = states().z0;
    const cmat& X = gates().X;
    show("The result of applying the bit-flip gate X on |0> is:",
         (X * psi).eval());

    psi = mket({1, 0});
    show("The result of applying the gate CNOT on the state |10> is:",
         (cnot() * psi).eval());

    const cmat U = rand_unitary(2, rng_);
    show("Generating a random one-qubit gate U:", U);
    show("The result of applying the Controlled-U gate on |10> is:",
         apply_ctrl(psi, U, {0}, {1}, {2, 2}));
  }

  void measurements() {
    const auto& gt = gates();
    const ket psi = mket({0, 0});
    const cmat U = gt.CNOT * kron(gt.H, gt.Id2);
    ket result = U * psi;
    show("We just produced the Bell state:", result);

    result = apply(result, gt.X, {1}, {2, 2});
    show("We produced the Bell state:", result);

    const auto measured = measure(result, gt.H, {0}, {2, 2}, rng_);
    out_ << ">> Measurement result: " << measured.result << '\n';
    out_ << ">> Probabilities: "
         << format_sequence(measured.probs, ", ", precision_) << '\n';
    out_ << ">> Resulting states:\n";
    for (const auto& st : measured.states) out_ << matrix(st) << "\n\n";
  }

  void channels() {
    const ket& b00 = states().b00;
    const cmat rho = b00 * b00.adjoint();
    show("Initial state:", rho);

    const cmat rhoTA = ptranspose(rho, {0}, {2, 2});
    show("Partial transpose of the first qubit:", rhoTA);
    out_ << ">> Eigenvalues of the partial transpose: "
         << format_sequence(hevals(rhoTA), " ", precision_) << '\n';

    const Channel ks{mket({0}) * mket({0}).adjoint(),
                     mket({1}) * mket({1}).adjoint()};
    out_ << ">> Kraus operators:\n";
    for (const auto& K : ks) out_ << matrix(K) << "\n\n";

    show("Superoperator matrix of the channel:", kraus2super(ks));
    show("Choi matrix of the channel:", kraus2choi(ks));

    const cmat rhoOut = apply_channel(rho, ks, {0}, {2, 2});
    show("After applying the channel, the output state is:", rhoOut);

    const cmat rhoA = ptrace(rhoOut, {1}, {2, 2});
    show("Partial trace over the second qubit of the output state:", rhoA);

    out_ << ">> Von-Neumann entropy: "
         << format_real(entropy(rhoA), precision_) << '\n';
  }

  void timing() {
    const Dims dims = Dims::uniform(9, 2);
    const ket c0 = shor_codeword(0);
    out_ << ">> First codeword of the Shor [[9,1,3]] code has "
         << c0.size() << " amplitudes\n";

    Timer t;
    const Permutation perm = rand_perm(9, rng_);
    const cmat c0perm = syspermute(c0, perm, dims);
    t.toc();
    out_ << ">> Permuting subsystems according to "
         << format_sequence(perm, ", ") << '\n';
    out_ << ">> Took " << seconds(t) << " seconds.\n";

    t.tic();
    const Permutation inv = invperm(perm);
    out_ << ">> Inverse permutation: " << format_sequence(inv, ", ") << '\n';
    const cmat c0invperm = syspermute(c0perm, inv, permute_dims(dims, perm));
    out_ << ">> Took " << seconds(t.toc()) << " seconds.\n";

    out_ << ">> Norm difference: "
         << format_real(norm(c0invperm - c0), precision_) << '\n';
  }

  void io() {
    const cmat rho = rand_rho(16, rng_);
    const auto path = std::filesystem::temp_directory_path() /
                      ("qsim_io_" + std::to_string(std::random_device{}()) +
                       ".qsim");
    save(rho, path);
    out_ << ">> Saved a random 16 x 16 density matrix\n";
    const cmat loaded = load(path);
    std::filesystem::remove(path);
    out_ << ">> Norm difference load/save: "
         << format_real(norm(loaded - rho), precision_) << '\n';
  }

  void exceptions() {
    const cmat rho = rand_rho(16, rng_);
    try {
      const double mi = qmutualinfo(rho, {0}, {4}, {2, 2, 2, 2});
      out_ << ">> Mutual information between first and fifth subsystem: "
           << format_real(mi, precision_) << '\n';
    } catch (const std::exception& e) {
      out_ << ">> Exception caught: " << e.what() << '\n';
    }
  }

 private:
  std::string matrix(const cmat& A) const { return format_matrix(A, precision_); }

  // Elapsed times get at least 8 decimals; sub-millisecond runs are common.
  std::string seconds(const Timer& t) const {
    return format_real(t.elapsed_seconds(), std::max<idx>(precision_, 8), 0.);
  }

  void show(const char* title, const cmat& A) {
    out_ << ">> " << title << '\n' << matrix(A) << '\n';
  }

  std::ostream& out_;
  idx precision_;
  Rng rng_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Dense qudit simulation examples", "qsim"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opts;
  app.add_option("--seed", opts.seed, "Seed of the random generator")
      ->capture_default_str();
  app.add_option("--precision", opts.precision,
                 "Digits after the decimal point in printed numbers")
      ->capture_default_str()
      ->check(CLI::Range(0, 17));

  using Action = void (Demo::*)();
  const std::map<std::string, std::pair<Action, const char*>> commands{
      {"minimal", {&Demo::minimal, "Print the |0> state"}},
      {"gates-states", {&Demo::gates_states, "Apply basic and controlled gates"}},
      {"measurements", {&Demo::measurements, "Measure half of a Bell pair"}},
      {"channels", {&Demo::channels, "Kraus channel, partial trace/transpose"}},
      {"timing", {&Demo::timing, "Permute a Shor codeword and time it"}},
      {"io", {&Demo::io, "Save and load a random density matrix"}},
      {"exceptions", {&Demo::exceptions, "Trigger and report a library error"}},
  };
  for (const auto& [name, cmd] : commands) app.add_subcommand(name, cmd.second);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "qsim: " << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    Demo demo(opts, out);
    for (const auto* sub : app.get_subcommands())
      (demo.*commands.at(sub->get_name()).first)();
  } catch (const std::exception& e) {
    err << "qsim: unexpected error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace qsim::cli
