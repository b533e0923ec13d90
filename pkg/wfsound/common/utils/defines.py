"""
This module defines constant values.
"""

from enum import Enum


# names given to the places and transitions added by net constructions
SHORT_CIRCUIT_TRANSITION = "t_sc"
SCALED_INITIAL_PLACE = "i_scaled"
SCALED_FINAL_PLACE = "o_scaled"
SCALED_INITIAL_TRANSITION = "t_i"
SCALED_FINAL_TRANSITION = "t_o"


class Semantics(str, Enum):
    # firing semantics
    N = "N"             # markings stay nonnegative, transitions must be enabled
    Z = "Z"             # markings may become negative


class Holds(str, Enum):
    # the three outcomes of a decision procedure
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


class CapKind(str, Enum):
    # which exploration cap stopped a search
    VERTICES = "maxVertices"
    NORM = "maxNorm"
    TREE_NODES = "treeNodes"


class Reason(str, Enum):
    # reason tags attached to certificates
    NO_INITIAL_TRANSITION = "NoInitialTransition"   # no t with pre(t) = {i:1}
    UNBOUNDED = "Unbounded"                         # pumping witness in the short-circuit net
    NOT_CYCLIC = "NotCyclic"                        # a marking cannot return to the root
    NOT_QUASI_LIVE = "NotQuasiLive"                 # some transition can never fire
    CANNOT_FINISH = "CannotFinish"                  # a reachable marking cannot reach f^k
    Z_UNBOUNDED = "ZUnbounded"                      # unbounded under integer semantics
    DISCONNECTED = "Disconnected"                   # f is redundant
    NO_INTEGER_WITNESS = "NoIntegerWitness"         # structural system infeasible
    TRAP = "Trap"                                   # a markable trap avoiding f
    NO_SOUND_NUMBER = "NoSoundNumber"               # scan reached the theoretical bound
    CAP_HIT = "CapHit"                              # exploration stopped by a cap
    NOT_WORKFLOW = "NotWorkflowNet"                 # the workflow conditions fail
