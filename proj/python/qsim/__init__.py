"""Dense simulation of qudit states, gates, channels and measurements."""

from ._qsim import (
    Error,
    Rng,
    adjoint,
    apply,
    apply_channel,
    apply_ctrl,
    bell00,
    choi2kraus,
    entropy,
    format_matrix,
    gate,
    hevals,
    hevects,
    invperm,
    kraus2choi,
    kraus2super,
    kron,
    load,
    measure,
    mket,
    multiidx_to_n,
    n_to_multiidx,
    norm,
    permute_dims,
    ptrace,
    ptranspose,
    qmutualinfo,
    rand_ket,
    rand_perm,
    rand_rho,
    rand_unitary,
    save,
    shannon,
    shor_codeword,
    state,
    syspermute,
    trace,
    transpose,
)

__all__ = [name for name in dir() if not name.startswith("_")]
