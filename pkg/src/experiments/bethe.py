"""Bethe-lattice averages on homogeneous trees."""

import numpy as np
import pandas as pd

from ..dos import bethe_average, stieltjes_dos
from ..experiment_config import ExperimentConfig
from ..graphs import build_homogeneous_tree
from ..hamiltonian import sample_operator
from .base import ExperimentResult

IDENTITY_TOL = 1e-12


def run_bethe(config: ExperimentConfig) -> ExperimentResult:
    law = config.law()
    z = complex(config.E, config.eta)
    depths = list(range(config.L + 1))

    vertices, edges, traces, trace_err = [], [], [], []
    for L in depths:
        tree = build_homogeneous_tree(config.K, L)
        ops = [sample_operator(tree, law, config.b, config.seed, r) for r in range(config.realizations)]
        mean, stderr = stieltjes_dos(ops, z)
        vertices.append(tree.vertex_count)
        edges.append(2 * tree.edge_count)
        traces.append(mean * tree.vertex_count)
        trace_err.append(stderr * tree.vertex_count)

    one, one_seq = bethe_average(vertices, config.K)
    degree, degree_seq = bethe_average(edges, config.K)
    trace, trace_seq = bethe_average(traces, config.K)

    result = ExperimentResult()
    result.scalars.update({
        "bethe_average_of_one": one,
        "bethe_average_of_degree": degree,
        "bethe_average_of_trace_im": trace,
        "z": [z.real, z.imag],
    })
    result.checks.update({
        "average_of_one_exact": bool(abs(one - 1.0) <= IDENTITY_TOL),
        "average_of_degree_exact": bool(abs(degree - (config.K + 1)) <= IDENTITY_TOL),
    })
    result.tables["bethe"] = pd.DataFrame({
        "L": depths[1:],
        "vertices": np.asarray(vertices[1:]),
        "one": one_seq,
        "degree": degree_seq,
        "trace_im": np.asarray(traces[1:]),
        "trace_im_stderr": np.asarray(trace_err[1:]),
        "bethe_trace_im": trace_seq,
    })
    return result
