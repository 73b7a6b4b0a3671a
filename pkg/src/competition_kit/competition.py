"""
Competition graphs and construction certificates.

A certificate proves k(G) <= k: it lists the n + k vertices of G ∪ I_k in
an order whose last k entries are the added isolated vertices, and gives
every position a clique of G drawn from the vertices before it. Turning
each clique into arcs towards the vertex at its position yields an acyclic
digraph D, and the certificate is valid when C(D) = G ∪ I_k.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path

from .cliques import Clique
from .exceptions import CertificateError, GraphFormatError
from .graph import Digraph, bits, is_acyclic, make_graph
from .serialization import dumps, graph_from_dict, graph_to_dict, loads

logger = logging.getLogger(__name__)


def competition_graph(digraph):
    """
    C(D): vertices x != y are adjacent when they share an out-neighbor in `digraph`.

    `digraph` does not need to be acyclic.
    """
    edges = set()
    for predators in digraph.in_neighbors:
        members = list(bits(predators))
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                edges.add((u, v))
    return make_graph(digraph.n, edges)


@dataclass(frozen=True)
class ConstructionCertificate:
    """
    An ordered clique assignment realizing G ∪ I_k as a competition graph.

    Attributes:
        graph (Graph): The base graph G on ``0 .. n-1``.
        k (int): Number of added isolated vertices, labeled ``n .. n+k-1``.
        order (tuple): All n + k labels; the added ones fill the last k positions.
        assignment (tuple): One `Clique` per position, the in-neighborhood of
            the vertex at that position.
    """

    graph: object
    k: int
    order: tuple
    assignment: tuple

    @property
    def size(self):
        return self.graph.n + self.k

    def to_dict(self):
        return {
            "graph": graph_to_dict(self.graph),
            "k": self.k,
            "order": list(self.order),
            "assignment": [list(clique.members) for clique in self.assignment],
        }

    @classmethod
    def from_dict(cls, data):
        """
        Raises:
            GraphFormatError: If `data` is not shaped like a certificate document.
        """
        if not isinstance(data, dict):
            raise GraphFormatError("a certificate document must be a JSON object")
        for key in ("graph", "k", "order", "assignment"):
            if key not in data:
                raise GraphFormatError(f"certificate document is missing '{key}'")
        graph = graph_from_dict(data["graph"])
        k, order, assignment = data["k"], data["order"], data["assignment"]
        if not _is_int(k) or k < 0:
            raise GraphFormatError("'k' must be a non-negative integer")
        if not isinstance(order, list) or not all(_is_int(v) for v in order):
            raise GraphFormatError("'order' must be a list of integers")
        if not isinstance(assignment, list) or not all(
            isinstance(members, list) and all(_is_int(v) for v in members)
            for members in assignment
        ):
            raise GraphFormatError("'assignment' must be a list of integer lists")
        return cls(
            graph, k, tuple(order), tuple(Clique.of(members) for members in assignment)
        )


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass(frozen=True)
class Problem:
    """
    A structural defect of a certificate.

    Attributes:
        message (str): Human readable description.
        position (int, optional): The position it was found at.
        fatal (bool): True when no digraph can be built from the certificate at all.
    """

    message: str
    position: int | None = None
    fatal: bool = False


def certificate_problems(cert):
    """
    List the structural defects of `cert`, without checking coverage.

    Returns:
        list: `Problem` values, empty for a well-formed certificate.
    """
    n, total = cert.graph.n, cert.size
    if sorted(cert.order) != list(range(total)):
        return [Problem(f"order is not a permutation of 0..{total - 1}", fatal=True)]
    if len(cert.assignment) != total:
        return [
            Problem(
                f"assignment has {len(cert.assignment)} entries, "
                f"expected one per position ({total})",
                fatal=True,
            )
        ]
    problems = []
    position_of = {v: i for i, v in enumerate(cert.order)}
    for position, vertex in enumerate(cert.order):
        if (vertex >= n) != (position >= n):
            problems.append(
                Problem(
                    f"vertex {vertex} at position {position}: "
                    f"added vertices must fill the last {cert.k} positions",
                    position,
                )
            )
    for position, clique in enumerate(cert.assignment):
        out_of_range = [v for v in clique if v < 0 or v >= total]
        if out_of_range:
            problems.append(
                Problem(
                    f"position {position}: members {out_of_range} are not vertices",
                    position,
                    fatal=True,
                )
            )
            continue
        added = [v for v in clique if v >= n]
        if added:
            problems.append(
                Problem(
                    f"position {position}: "
                    f"added vertices {added} appear inside a clique",
                    position,
                )
            )
        late = [v for v in clique if position_of[v] >= position]
        if late:
            problems.append(
                Problem(
                    f"prefix violation at position {position}: "
                    f"members {late} do not occur before it",
                    position,
                )
            )
        base = Clique.of(v for v in clique if v < n)
        if not base.is_clique_of(cert.graph):
            problems.append(
                Problem(
                    f"position {position}: {base} is not a clique of the graph",
                    position,
                )
            )
    return problems


def certificate_to_digraph(cert, strict=True):
    """
    Build the digraph of `cert`: an arc from every clique member to the vertex
    at its position.

    Args:
        cert (ConstructionCertificate): The certificate.
        strict (bool): Raise on any structural problem; when False only
            problems that make the digraph impossible to build raise.

    Returns:
        Digraph: On n + k vertices; acyclic whenever the prefix condition holds.

    Raises:
        CertificateError: Naming the position of the first structural violation.
    """
    for problem in certificate_problems(cert):
        if strict or problem.fatal:
            raise CertificateError(problem.message, problem.position)
    arcs = set()
    for position, clique in enumerate(cert.assignment):
        prey = cert.order[position]
        arcs.update((predator, prey) for predator in clique if predator != prey)
    return Digraph(cert.size, tuple(sorted(arcs)))


@dataclass(frozen=True)
class CertificateVerification:
    """
    Outcome of `verify_certificate`.

    Attributes:
        valid (bool): True iff C(D) = G ∪ I_k for the certificate's acyclic digraph D.
        missing (tuple): Edges of G absent from C(D).
        surplus (tuple): Edges of C(D) absent from G ∪ I_k.
        problems (tuple): Structural problems as `Problem` values.
        acyclic (bool): Whether the certificate's digraph is acyclic.
    """

    valid: bool
    missing: tuple = ()
    surplus: tuple = ()
    problems: tuple = field(default=())
    acyclic: bool = False

    def diagnostics(self):
        lines = [problem.message for problem in self.problems]
        lines.extend(f"missing edge {u}-{v}" for u, v in self.missing)
        lines.extend(f"surplus edge {u}-{v}" for u, v in self.surplus)
        if not self.acyclic and not any(problem.fatal for problem in self.problems):
            lines.append("the digraph has a directed cycle")
        return lines

    def to_dict(self):
        return {
            "valid": self.valid,
            "missing": [list(edge) for edge in self.missing],
            "surplus": [list(edge) for edge in self.surplus],
            "diagnostics": self.diagnostics(),
        }

    def __bool__(self):
        return self.valid


def verify_certificate(cert):
    """
    Check that `cert` realizes G ∪ I_k as the competition graph of an acyclic digraph.

    Never raises for a broken certificate: every defect ends up in the
    returned diagnostics.

    Returns:
        CertificateVerification: The verdict with missing/surplus edges and
            structural problems.
    """
    problems = tuple(certificate_problems(cert))
    if any(problem.fatal for problem in problems):
        logger.info("Certificate rejected: %s", problems[0].message)
        return CertificateVerification(False, problems=problems)
    digraph = certificate_to_digraph(cert, strict=False)
    produced = competition_graph(digraph).edge_set
    expected = cert.graph.union_isolated(cert.k).edge_set
    missing = tuple(sorted(expected - produced))
    surplus = tuple(sorted(produced - expected))
    acyclic = is_acyclic(digraph).acyclic
    valid = not problems and not missing and not surplus and acyclic
    if valid:
        logger.info("Certificate verified: k(%s) <= %d", cert.graph, cert.k)
    else:
        logger.info(
            "Certificate rejected: %d problems, %d missing, %d surplus edges",
            len(problems),
            len(missing),
            len(surplus),
        )
    return CertificateVerification(valid, missing, surplus, problems, acyclic)


def render_certificate(cert):
    return dumps(cert.to_dict())


def parse_certificate(text):
    return ConstructionCertificate.from_dict(loads(text))


def read_certificate(path):
    """
    Raises:
        GraphFormatError: If the file cannot be read or is not a certificate document.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_certificate(text)


def write_certificate(path, cert):
    Path(path).write_text(render_certificate(cert), encoding="utf-8")
