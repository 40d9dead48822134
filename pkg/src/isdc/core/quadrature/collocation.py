"""Implement the collocation nodes, the integration weights and `CollocationTable`."""
from collections import namedtuple
import logging

import numpy as np
from numpy.polynomial import legendre as leg

logger = logging.getLogger(__name__)

GAUSS_LOBATTO = "gauss-lobatto"
GAUSS_RADAU_RIGHT = "gauss-radau-right"
GAUSS_LEGENDRE = "gauss-legendre"
NODE_RULES = (GAUSS_LOBATTO, GAUSS_RADAU_RIGHT, GAUSS_LEGENDRE)

MIN_NODES = {GAUSS_LOBATTO: 2, GAUSS_RADAU_RIGHT: 2, GAUSS_LEGENDRE: 2}

Substep = namedtuple("Substep", ["target", "previous", "fraction", "weights"])
Substep.__doc__ = """One Euler update of a sweep.

The update goes from node `previous` to node `target`. A `previous` index of ``-1``
stands for the initial value of the step. `fraction` is the substep length as a
fraction of the step size, and `weights` is the row of spectral integration weights
over that substep.
"""


def _lobatto(num_nodes):
    if num_nodes == 2:
        return np.array([-1.0, 1.0])
    inner = leg.Legendre.basis(num_nodes - 1).deriv().roots().real
    x = np.concatenate(([-1.0], np.sort(inner), [1.0]))
    return x


def _radau_right(num_nodes):
    poly = leg.Legendre.basis(num_nodes) - leg.Legendre.basis(num_nodes - 1)
    x = np.sort(poly.roots().real)
    x[-1] = 1.0
    return x


def _legendre(num_nodes):
    return leg.leggauss(num_nodes)[0]


def make_nodes(rule, num_nodes):
    """Return the collocation nodes of a quadrature rule mapped onto [0, 1].

    Parameters
    ----------
    rule : str
        The node rule. Accepted values are ``'gauss-lobatto'``,
        ``'gauss-radau-right'`` and ``'gauss-legendre'``.
    num_nodes : int
        The number of collocation nodes M.

    Returns
    -------
    numpy.ndarray
        The M strictly increasing nodes in [0, 1].

    Raises
    ------
    ValueError
        If `rule` is unknown.
        If `num_nodes` is below the minimum of the rule.

    Notes
    -----
    Lobatto nodes are the endpoints and the roots of the derivative of the Legendre
    polynomial of degree M-1. Right Radau nodes are the roots of P_M - P_{M-1}, which
    include the right endpoint. Symmetric rules are symmetrized after root finding so
    that nodes mirror each other exactly around 0.5.
    """
    if rule not in NODE_RULES:
        raise ValueError(
            f"Argument 'rule' must be one of {', '.join(NODE_RULES)}, not '{rule}'."
        )
    num_nodes = int(num_nodes)
    if num_nodes < MIN_NODES[rule]:
        raise ValueError(
            f"Rule '{rule}' requires at least {MIN_NODES[rule]} nodes, got {num_nodes}."
        )
    if rule == GAUSS_LOBATTO:
        x = _lobatto(num_nodes)
    elif rule == GAUSS_RADAU_RIGHT:
        x = _radau_right(num_nodes)
    else:
        x = _legendre(num_nodes)
    if rule != GAUSS_RADAU_RIGHT:
        x = 0.5 * (x - x[::-1])
    nodes = 0.5 * (x + 1.0)
    if rule == GAUSS_LOBATTO:
        nodes[0], nodes[-1] = 0.0, 1.0
    return nodes


def lagrange_basis(nodes, x):
    """Evaluate the Lagrange basis polynomials of `nodes` at the points `x`.

    Parameters
    ----------
    nodes : numpy.ndarray
        The interpolation nodes.
    x : numpy.ndarray
        The evaluation points.

    Returns
    -------
    numpy.ndarray
        A ``(len(x), len(nodes))`` matrix, column j holding the j-th basis polynomial.
    """
    nodes = np.asarray(nodes, dtype=float)
    x = np.atleast_1d(np.asarray(x, dtype=float))
    basis = np.ones((x.size, nodes.size))
    for j, tj in enumerate(nodes):
        for k, tk in enumerate(nodes):
            if k != j:
                basis[:, j] *= (x - tk) / (tj - tk)
    return basis


def _integrate_basis(nodes, a, b):
    """Integrate every Lagrange basis polynomial from `a` to `b`.

    A Gauss-Legendre rule with M+1 points is exact up to degree 2M+1, hence exact for
    the basis polynomials of degree M-1.
    """
    if b == a:
        return np.zeros(len(nodes))
    xg, wg = leg.leggauss(len(nodes) + 1)
    x = 0.5 * (b - a) * xg + 0.5 * (a + b)
    w = 0.5 * (b - a) * wg
    return lagrange_basis(nodes, x).T @ w


def _check_nodes(nodes):
    nodes = np.asarray(nodes, dtype=float).ravel()
    if nodes.size < 2:
        raise ValueError("At least two nodes are required.")
    if not np.all(np.isfinite(nodes)):
        raise ValueError("Nodes must be finite.")
    if np.any(np.diff(nodes) <= 0):
        raise ValueError("Nodes must be strictly increasing (no duplicates).")
    if nodes[0] < 0.0 or nodes[-1] > 1.0:
        raise ValueError("Nodes must lie in [0, 1].")
    return nodes


def make_weights(nodes):
    """Compute the node-to-node and the origin-to-node spectral integration weights.

    Parameters
    ----------
    nodes : numpy.ndarray
        Strictly increasing nodes in [0, 1].

    Returns
    -------
    numpy.ndarray
        The ``(M-1, M)`` substep weights s such that ``sum_j s[m, j] f(tau_j)``
        integrates f from ``tau_m`` to ``tau_{m+1}``.
    numpy.ndarray
        The ``(M, M)`` full weights q such that ``sum_j q[m, j] f(tau_j)`` integrates f
        from ``0`` to ``tau_m``.

    Raises
    ------
    ValueError
        If the nodes are not strictly increasing within [0, 1].
    """
    nodes = _check_nodes(nodes)
    substep = np.array(
        [
            _integrate_basis(nodes, nodes[m], nodes[m + 1])
            for m in range(nodes.size - 1)
        ]
    )
    first = _integrate_basis(nodes, 0.0, nodes[0])
    full = np.vstack((first, first + np.cumsum(substep, axis=0)))
    return substep, full


class CollocationTable(object):
    """Store the collocation nodes and the integration weights of one rule.

    Tables are immutable: the arrays are flagged read-only, so one table can be shared
    by concurrent runs.

    Parameters
    ----------
    rule : str
        The node rule.
    num_nodes : int
        The number of collocation nodes M.

    See Also
    --------
    make_nodes
    make_weights
    """

    def __init__(self, rule, num_nodes):
        self._rule = rule
        self._setup(make_nodes(rule, num_nodes))

    @classmethod
    def from_nodes(cls, nodes):
        """Build a table from an arbitrary set of nodes.

        Parameters
        ----------
        nodes : Iterable [float]
            Strictly increasing nodes in [0, 1].

        Returns
        -------
        CollocationTable
            The table.
        """
        table = cls.__new__(cls)
        table._rule = "custom"
        table._setup(_check_nodes(nodes))
        return table

    def _setup(self, nodes):
        substep, full = make_weights(nodes)
        end = full[-1] + _integrate_basis(nodes, nodes[-1], 1.0)
        for array in (nodes, substep, full, end):
            array.setflags(write=False)
        self._nodes = nodes
        self._substep = substep
        self._full = full
        self._end = end
        self._substeps = self._gen_substeps()
        logger.debug(f"Collocation table '{self._rule}' with nodes {nodes.tolist()}.")

    def _gen_substeps(self):
        steps = []
        if not self.left_is_node:
            steps.append(Substep(0, -1, self._nodes[0], self._full[0]))
        for m in range(self.num_nodes - 1):
            fraction = self._nodes[m + 1] - self._nodes[m]
            steps.append(Substep(m + 1, m, fraction, self._substep[m]))
        return tuple(steps)

    @property
    def rule(self):
        """Return the node rule.

        Returns
        -------
        str
            The node rule, ``'custom'`` for tables built from explicit nodes.
        """
        return self._rule

    @property
    def num_nodes(self):
        """Return the number of collocation nodes M."""
        return self._nodes.size

    @property
    def nodes(self):
        """Return the collocation nodes in [0, 1].

        Returns
        -------
        numpy.ndarray
            The M nodes.
        """
        return self._nodes

    @property
    def substep_weights(self):
        """Return the ``(M-1, M)`` node-to-node integration weights."""
        return self._substep

    @property
    def full_weights(self):
        """Return the ``(M, M)`` origin-to-node integration weights."""
        return self._full

    @property
    def end_weights(self):
        """Return the weights integrating from the origin to the end of the step.

        Returns
        -------
        numpy.ndarray
            The M quadrature weights over [0, 1].
        """
        return self._end

    @property
    def left_is_node(self):
        """Return ``True`` if the first node is the start of the step."""
        return self._nodes[0] == 0.0

    @property
    def right_is_node(self):
        """Return ``True`` if the last node is the end of the step."""
        return self._nodes[-1] == 1.0

    @property
    def substeps(self):
        """Return the Euler updates performed by one sweep, in order.

        Returns
        -------
        tuple [Substep]
            M-1 updates when the first node is the start of the step, M otherwise.
        """
        return self._substeps

    @property
    def num_solves(self):
        """Return the number of implicit solves per sweep."""
        return len(self._substeps)

    def __repr__(self):
        return f"CollocationTable(rule='{self.rule}', num_nodes={self.num_nodes})"
