"""Implement the `SweepState` class."""
import numpy as np


class SweepState(object):
    """Store the node values of one collocation interval and their split evaluations.

    Parameters
    ----------
    table : isdc.core.quadrature.CollocationTable
        The collocation table.
    dt : float
        The step size.
    u0 : numpy.ndarray
        The initial value of the step.
    u : numpy.ndarray
        The node values, with shape ``(M, nx, ny)``.
    f_expl : numpy.ndarray
        The explicit part at every node, unweighted.
    f_impl_w : numpy.ndarray
        The weighted implicit part at every node.

    Attributes
    ----------
    k : int
        The number of sweeps performed.
    f_impl : numpy.ndarray or None
        The unweighted implicit part from the last residual evaluation, used as warm
        starts of the weighting inversions.
    w_cycles : int
        The cycles spent in weighting inversions.
    f_impl_k : int
        The sweep index `f_impl` was evaluated at, ``-1`` if never.
    solvers : dict [int, isdc.core.multigrid.SolverABC]
        The shifted solvers, one per substep.
    """

    def __init__(self, table, dt, u0, u, f_expl, f_impl_w):
        self.table = table
        self.dt = float(dt)
        self.u0 = u0
        self.u = u
        self.f_expl = f_expl
        self.f_impl_w = f_impl_w
        self.k = 0
        self.f_impl = None
        self.f_impl_k = -1
        self.w_cycles = 0
        self.solvers = {}

    @property
    def num_nodes(self):
        """Return the number of collocation nodes."""
        return self.u.shape[0]

    def node_times(self, t0=0.0):
        """Return the physical times of the nodes for a step starting at `t0`."""
        return t0 + self.dt * np.asarray(self.table.nodes)

    def __repr__(self):
        return f"SweepState(num_nodes={self.num_nodes}, dt={self.dt}, k={self.k})"
