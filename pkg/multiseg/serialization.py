"""JSON-ready dictionaries for every result type; values travel doubled (`*_x2`, `b2`, `e2`)."""

from typing import Any, Union

from multiseg.core import Multisegment, RankTriangle, Segment, Weight
from multiseg.duality_mw import DualTrace
from multiseg.errors import ParseError
from multiseg.families import ArthurDecomposition, Classification, InvariantProfile
from multiseg.order_space import RigidityReport, SweepResult

JSON = dict[str, Any]


def segment_to_json(segment: Segment) -> JSON:
    return {"b2": segment.b2, "e2": segment.e2}


def multisegment_to_json(alpha: Multisegment) -> JSON:
    return {"segments": [segment_to_json(segment) for segment in alpha.segments]}


def multisegment_from_json(payload: JSON) -> Multisegment:
    try:
        return Multisegment.of(
            Segment(int(item["b2"]), int(item["e2"])) for item in payload["segments"]
        )
    except (KeyError, TypeError, ValueError) as error:
        raise ParseError(f"malformed multisegment JSON: {error}", 0) from None


def weight_to_json(w: Weight) -> JSON:
    return {"counts": [{"x2": twice, "count": count} for twice, count in w.counts]}


def ranks_to_json(triangle: RankTriangle) -> JSON:
    return {
        "support_x2": None if triangle.is_empty() else [triangle.lo2, triangle.hi2],
        "r": [
            {"i2": i2, "j2": j2, "r": triangle.r(i2, j2)} for i2, j2 in triangle.points()
        ],
    }


def trace_to_json(trace: DualTrace) -> list[JSON]:
    return [
        {
            "emitted": segment_to_json(iteration.emitted),
            "chain": [
                {"segment": segment_to_json(link.segment), "removed_x2": link.removed2}
                for link in iteration.chain
            ],
        }
        for iteration in trace.iterations
    ]


def profile_to_json(profile: InvariantProfile) -> JSON:
    return {
        "e_x2": profile.e_max.twice,
        "L": profile.longest,
        "n": profile.count,
        "c": profile.components,
        "S": profile.cover_size,
        "C": profile.endoscopic,
    }


def classification_to_json(classification: Classification) -> JSON:
    return {
        "simple": classification.simple,
        "ladder": classification.ladder,
        "symmetric": classification.symmetric,
        "arthur": classification.arthur,
        "center_x2": None if classification.center is None else classification.center.twice,
    }


def decomposition_to_json(decomposition: Union[ArthurDecomposition, None]) -> Union[JSON, None]:
    if decomposition is None:
        return None
    return {
        "offset_x2": decomposition.offset.twice,
        "blocks": [
            {"block": multisegment_to_json(block), "multiplicity": multiplicity}
            for block, multiplicity in decomposition.blocks
        ],
    }


def report_to_json(report: RigidityReport) -> JSON:
    return {
        "subject": multisegment_to_json(report.subject),
        "singleton": report.singleton,
        "witnesses": [multisegment_to_json(beta) for beta in report.witnesses],
        "class_size": report.class_size,
        "method": report.method.value,
    }


def summary_to_json(result: SweepResult, include_time: bool = True) -> JSON:
    summary: JSON = {
        "summary": True,
        "family": result.family.value,
        "checked": result.checked,
        "failures": len(result.failures),
    }
    if include_time:
        summary["wall_time_s"] = round(result.elapsed, 3)
    return summary
