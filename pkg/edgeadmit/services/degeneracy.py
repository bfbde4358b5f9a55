import logging
from collections.abc import Sequence

from edgeadmit.exceptions.degeneracy import LayoutError
from edgeadmit.models.multigraph import MultiGraph
from edgeadmit.schemas.certificates import (
    CertificateCheck,
    DegeneracyReport,
    DegeneracyVerdict,
    HideOut,
    Layout,
)
from edgeadmit.schemas.graph import Speed, format_speed
from edgeadmit.services.cuts import CutService

logger = logging.getLogger(__name__)


class DegeneracyService:
    """s-edge-degeneracy with layouts and hide-outs as dual certificates."""

    def __init__(self, cut_service: CutService):
        self.cut_service = cut_service

    def build_layout(self, graph: MultiGraph, speed: Speed, order: Sequence[int]) -> Layout:
        """
        Computes the support of every vertex of `order` towards its predecessors.

        Raises:
            LayoutError: If `order` is not a permutation of the vertex set.
        """
        self._check_permutation(graph, order)
        supports = []
        for position, vertex in enumerate(order):
            blocking = self.cut_service.supp(graph, speed, vertex, order[:position])
            supports.append(blocking.size)
        return Layout(order=tuple(order), supports=tuple(supports), speed=speed)

    def layout_degeneracy(self, graph: MultiGraph, speed: Speed, order: Sequence[int]) -> int:
        """Maximum support along `order`."""
        return self.build_layout(graph, speed, order).degeneracy

    def check_degeneracy(self, graph: MultiGraph, speed: Speed, k: int) -> DegeneracyVerdict:
        """
        Decides whether the s-edge-degeneracy is at most k.

        Peels the vertex set from the back: repeatedly removes the lowest-id
        vertex whose support towards the remaining vertices is at most k. When
        no such vertex exists the remaining set is the unique maximal
        (k+1)-hide-out.

        Args:
            graph: Input multigraph.
            speed: Path-length bound, None for unbounded.
            k: Support threshold, nonnegative.

        Returns:
            A verdict holding either a layout of degeneracy at most k or the
            maximal (k+1)-hide-out.
        """
        if k < 0:
            raise LayoutError(f"k must be nonnegative, got {k}")

        remaining = set(graph.vertices)
        peeled: list[tuple[int, int]] = []
        while remaining:
            supports: dict[int, int] = {}
            chosen = None
            for vertex in sorted(remaining):
                support = self.cut_service.supp(graph, speed, vertex, remaining - {vertex}).size
                if support <= k:
                    chosen = vertex
                    peeled.append((vertex, support))
                    break
                supports[vertex] = support

            if chosen is None:
                hideout = HideOut(vertices=tuple(sorted(remaining)), k=k + 1, speed=speed, supports=supports)
                logger.info(
                    "⚠️ Degeneracy exceeds %s (s=%s): hide-out of %s vertices",
                    k, format_speed(speed), len(remaining),
                )
                return DegeneracyVerdict(k=k, speed=speed, hideout=hideout)
            remaining.remove(chosen)

        peeled.reverse()
        layout = Layout(
            order=tuple(vertex for vertex, _ in peeled),
            supports=tuple(support for _, support in peeled),
            speed=speed,
        )
        logger.info("✅ Degeneracy at most %s (s=%s), layout found", k, format_speed(speed))
        return DegeneracyVerdict(k=k, speed=speed, layout=layout)

    def edge_degeneracy(self, graph: MultiGraph, speed: Speed) -> DegeneracyReport:
        """
        Smallest k with a layout verdict, searched upwards from 0.

        The layout at k = delta and the hide-out at k = delta - 1 come back
        together as a matched certificate pair.
        """
        if graph.number_of_vertices() == 0:
            raise LayoutError("the graph has no vertices")

        previous: DegeneracyVerdict | None = None
        for k in range(graph.max_degree() + 1):
            verdict = self.check_degeneracy(graph, speed, k)
            if verdict.layout is not None:
                hideout = previous.hideout if previous is not None else None
                logger.info("✅ s-edge-degeneracy (s=%s) = %s", format_speed(speed), k)
                return DegeneracyReport(delta=k, speed=speed, layout=verdict.layout, hideout=hideout)
            previous = verdict
        # The last peeled vertex has support at most its degree.
        raise LayoutError(f"no layout of degeneracy at most {graph.max_degree()} found")

    def maximal_hideout(self, graph: MultiGraph, speed: Speed, k: int) -> HideOut:
        """Unique maximal (k, s)-hide-out; empty when none exists."""
        if k < 1:
            raise LayoutError(f"hide-out parameter must be at least 1, got {k}")
        verdict = self.check_degeneracy(graph, speed, k - 1)
        if verdict.hideout is not None:
            return verdict.hideout
        return HideOut(vertices=(), k=k, speed=speed)

    def verify_layout(self, graph: MultiGraph, speed: Speed, layout: Layout, k: int | None = None) -> CertificateCheck:
        """Re-derives every recorded support; with `k`, also requires degeneracy at most k."""
        reasons = []
        if layout.speed != speed:
            reasons.append(
                f"layout was computed for s={format_speed(layout.speed)}, checking s={format_speed(speed)}"
            )
        try:
            recomputed = self.build_layout(graph, speed, layout.order)
        except LayoutError as error:
            reasons.append(error.detail)
        else:
            for position, (recorded, actual) in enumerate(zip(layout.supports, recomputed.supports)):
                if recorded != actual:
                    reasons.append(
                        f"support of vertex {layout.order[position]} is {actual}, certificate says {recorded}"
                    )
            if k is not None and recomputed.degeneracy > k:
                reasons.append(f"layout degeneracy {recomputed.degeneracy} exceeds {k}")
        return self._check('layout', reasons)

    def verify_hideout(self, graph: MultiGraph, speed: Speed, hideout: HideOut, k: int | None = None) -> CertificateCheck:
        """
        Re-checks that every member keeps support at least `hideout.k` to the rest.

        With `k`, the hide-out must refute degeneracy at most k: it has to be
        nonempty with parameter at least k + 1.
        """
        reasons = []
        if hideout.speed != speed:
            reasons.append(
                f"hide-out was computed for s={format_speed(hideout.speed)}, checking s={format_speed(speed)}"
            )
        members = set(hideout.vertices)
        unknown = sorted(members - graph.vertices)
        if unknown:
            reasons.append(f"vertices {unknown} are not in the graph")
        else:
            for vertex in hideout.vertices:
                support = self.cut_service.supp(graph, speed, vertex, members - {vertex}).size
                if support < hideout.k:
                    reasons.append(f"vertex {vertex} has support {support} < {hideout.k}")
                recorded = hideout.supports.get(vertex)
                if recorded is not None and recorded != support:
                    reasons.append(f"support of vertex {vertex} is {support}, certificate says {recorded}")
        if k is not None:
            if not hideout.vertices:
                reasons.append("an empty hide-out refutes nothing")
            if hideout.k < k + 1:
                reasons.append(f"hide-out parameter {hideout.k} does not exceed {k}")
        return self._check('hideout', reasons)

    def hideout_is_maximal(self, graph: MultiGraph, speed: Speed, hideout: HideOut) -> bool:
        """True iff every outside vertex has support below `hideout.k` into the hide-out."""
        members = set(hideout.vertices)
        for vertex in sorted(graph.vertices - members):
            if self.cut_service.supp(graph, speed, vertex, members).size >= hideout.k:
                return False
        return True

    @staticmethod
    def _check(certificate: str, reasons: list[str]) -> CertificateCheck:
        if reasons:
            logger.warning("❌ %s certificate rejected: %s", certificate, "; ".join(reasons))
        return CertificateCheck(certificate=certificate, accepted=not reasons, reasons=tuple(reasons))

    @staticmethod
    def _check_permutation(graph: MultiGraph, order: Sequence[int]) -> None:
        if len(order) != graph.number_of_vertices() or set(order) != graph.vertices:
            missing = sorted(graph.vertices - set(order))
            extra = sorted(set(order) - graph.vertices)
            raise LayoutError(
                f"order has {len(order)} entries for {graph.number_of_vertices()} vertices "
                f"(missing {missing}, unknown {extra})"
            )
