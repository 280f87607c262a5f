"""
Classification of simple extensions, driven by a state machine: while the
pivot of ``a`` opens a new point outside the chi-set of the current
submodel, the whole Z-chain of the pivot is adjoined. The loop ends when
``a`` lies in the span (Gamma_f) or its pivot is a loose class whose
successor is already a point (Gamma_f plus a line).
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from transitions import Machine

from pdgcalc.extensions.cuts import ExtensionPlan, extend_zed
from pdgcalc.extensions.embedding import EmbeddingMap, restrict
from pdgcalc.extensions.loose import adjoin_class
from pdgcalc.extensions.simple import (
    DeltaCase, delta_gamma, pivot_of, truncate_at_pivot,
)
from pdgcalc.model.group import GroupElement
from pdgcalc.model.spec import GeneratorId, Submodel

logger = logging.getLogger(__name__)

GAMMA_F = "GammaF"
GAMMA_F_PLUS_LINE = "GammaFPlusLine"


@dataclass
class SimpleExtension:
    """
    Args:
        kind (str): GAMMA_F or GAMMA_F_PLUS_LINE
        plan (ExtensionPlan): Z-chains inserted over the submodel
        pivot (GeneratorId): the loose class spanning the extra line
        model (ModelSpec): the constructed model
        embedding (EmbeddingMap): the constructed model into the ambient one
        image (GroupElement): the element of ``model`` playing the part of a
        trace (list(str)): one line per step of the construction
    """
    kind: str
    plan: ExtensionPlan
    model: object
    embedding: EmbeddingMap
    image: GroupElement
    pivot: Optional[GeneratorId] = None
    trace: List[str] = field(default_factory=list)

    def describe(self):
        text = "{} plan={}".format(self.kind, self.plan)
        if self.pivot is not None:
            text += " class={}".format(
                self.embedding.dst.format_generator(self.pivot))
        return text


class ClassificationDriver(object):

    states = [
        "analysing",
        "adjoining",
        "gamma_f",
        "gamma_f_plus_line",
    ]
    initial_state = "analysing"

    def __init__(self, ambient, sub, a):
        self.ambient = ambient
        self.original = sub
        self.current = sub
        self.a = a
        self.report = None
        self.added = []
        self.trace = []

        self.machine = Machine(model=self,
                               states=ClassificationDriver.states,
                               initial=ClassificationDriver.initial_state,
                               send_event=True,
                               prepare_event=["analyse"],
                               ignore_invalid_triggers=True)

        # order is trigger, source, dest
        # from analysing
        self.machine.add_transition("step", "analysing", "gamma_f",
                                    conditions=["is_in_span"])
        self.machine.add_transition("step", "analysing", "gamma_f_plus_line",
                                    conditions=["is_max_inside"])
        self.machine.add_transition("step", "analysing", "adjoining",
                                    conditions=["is_cut_plus_new_point"],
                                    after=["adjoin_pivot_chain"])

        # from adjoining
        self.machine.add_transition("step", "adjoining", "analysing")

    @property
    def is_done(self):
        return self.state in ("gamma_f", "gamma_f_plus_line")

    def analyse(self, event):
        if self.state != "analysing":
            return
        if self.current.in_span(self.a):
            self.report = None
        else:
            self.report = delta_gamma(self.ambient, self.current, self.a)
            self.trace.append(self.report.describe())

    def is_in_span(self, event):
        return self.current.in_span(self.a)

    def is_max_inside(self, event):
        return self.report is not None and \
            self.report.case is DeltaCase.MAX_INSIDE_CHI_SET

    def is_cut_plus_new_point(self, event):
        return self.report is not None and \
            self.report.case is DeltaCase.CUT_PLUS_NEW_POINT

    def adjoin_pivot_chain(self, event):
        chain = self.report.pivot.chain
        self.added.append(chain)
        self.current = Submodel(self.current.chains | {chain},
                                self.current.loose)
        self.trace.append("adjoin {}".format(self.ambient.chain_name(chain)))
        logger.debug("Adjoined {} while classifying {}".format(
            self.ambient.chain_name(chain), self.a))

    def run(self):
        # each round adds a chain of the ambient model
        for _ in range(2 * self.ambient.num_chains + 2):
            if self.is_done:
                break
            self.step()
        assert self.is_done
        return self.build()

    def plan(self):
        return ExtensionPlan.of(
            sum(1 for pos in self.original.chains if pos < chain)
            for chain in self.added)

    def build(self):
        sub_model, _ = restrict(self.ambient, self.original.chains,
                                self.original.loose)
        plan = self.plan()
        model, _ = extend_zed(sub_model, plan)
        chains = sorted(self.current.chains)
        chain_map = {i: (pos, Fraction(0)) for i, pos in enumerate(chains)}
        loose_map = {name: name for name in self.original.loose}

        if self.state == "gamma_f":
            embedding = EmbeddingMap(model, self.ambient, chain_map, loose_map)
            image = embedding.preimage(self.a)
            return SimpleExtension(GAMMA_F, plan, model, embedding, image,
                                   trace=self.trace)

        pivot = self.report.pivot
        pos = chains.index(pivot.chain)
        succ = self.ambient.succ(pivot)
        model = adjoin_class(model, GeneratorId(pos, pivot.level),
                             GeneratorId(pos, succ.level))
        new_name = max(lc.name for lc in model.loose)
        loose_map[new_name] = self.ambient.loose_at(pivot).name
        embedding = EmbeddingMap(model, self.ambient, chain_map, loose_map)
        image = embedding.preimage(truncate_at_pivot(self.a, pivot))
        return SimpleExtension(GAMMA_F_PLUS_LINE, plan, model, embedding,
                               image, pivot=pivot, trace=self.trace)


def classify_simple_extension(ambient, sub, a):
    """
    Finds the isomorphism type of Gamma<a> over Gamma

    Args:
        ambient (ModelSpec): model holding everything
        sub (Submodel): the submodel Gamma
        a (GroupElement): element outside the span of sub

    Returns:
        SimpleExtension

    Raises:
        NotInSubmodelError: when a already lies in the span of sub
    """
    pivot_of(sub, a)
    driver = ClassificationDriver(ambient, sub, a)
    result = driver.run()
    logger.info("Classified {} over {}: {}".format(
        a, sub.describe(ambient), result.describe()))
    return result
