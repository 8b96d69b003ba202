"""JSON codecs for groups, rings, families, reports, and recipes.

Files are emitted through canonical_dumps (sorted keys, two-space indent,
trailing newline) so identical inputs produce byte-identical output.
"""

from __future__ import annotations

import json

from .constructions import ConstructionResult, ExpansionRecipe, Prediction
from .groups import convention_from_name, make_group
from .multisets import (DesignFamily, VerificationReport, Witness,
                        make_family)
from .rings import make_ring


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def family_to_json(family: DesignFamily) -> dict:
    return {
        "group": family.group.descriptor(),
        "blocks": [b.positions() for b in family.blocks],
        "forbidden": (sorted(family.forbidden)
                      if family.forbidden is not None else None),
    }


def family_from_json(data: dict) -> DesignFamily:
    group = make_group(data["group"])
    forbidden = data.get("forbidden")
    return make_family(group, data["blocks"],
                       forbidden=None if forbidden is None else forbidden)


def witness_to_json(w: Witness | None) -> dict | None:
    if w is None:
        return None
    return {
        "element": w.element,
        "coords": list(w.coords),
        "expected": w.expected,
        "actual": w.actual,
        "context": w.context,
    }


def report_to_json(report: VerificationReport) -> dict:
    return {
        "kind": report.kind,
        "v": report.v,
        "h": report.h,
        "K": None if report.K is None else list(report.K),
        "lambda_or_mu": report.lambda_or_mu,
        "partition_target": report.partition_target,
        "witness": witness_to_json(report.witness),
    }


def prediction_to_json(pred: Prediction) -> dict:
    return {
        "kind": pred.kind,
        "v": pred.v,
        "K": list(pred.K),
        "lambda_or_mu": pred.lambda_or_mu,
        "h": pred.h,
    }


def prediction_from_json(data: dict) -> Prediction:
    return Prediction(data["kind"], int(data["v"]),
                      tuple(int(k) for k in data["K"]),
                      int(data["lambda_or_mu"]), int(data.get("h", 1)))


def result_to_json(result: ConstructionResult) -> dict:
    return {
        "family": family_to_json(result.family),
        "declared": prediction_to_json(result.predicted),
        "report": report_to_json(result.report),
        "certified": result.certified,
        "convention": result.convention.value,
    }


def recipe_to_json(recipe: ExpansionRecipe) -> dict:
    return {
        "pdf": family_to_json(recipe.pdf),
        "ring": recipe.ring.descriptor(),
        "y": list(recipe.y),
        "f_map": list(recipe.f_map),
        "starters": list(recipe.starters),
        "completion": recipe.completion,
        "convention": recipe.convention.value,
    }


def recipe_from_json(data: dict) -> ExpansionRecipe:
    return ExpansionRecipe(
        pdf=family_from_json(data["pdf"]),
        ring=make_ring(data["ring"]),
        y=tuple(int(x) for x in data["y"]),
        f_map=tuple(int(x) for x in data["f_map"]),
        starters=tuple(int(x) for x in data["starters"]),
        completion=data["completion"],
        convention=convention_from_name(data["convention"]),
    )
