"""
Results of the soundness procedures.
"""

from wfsound.common.utils.defines import Holds


class Certificate(object):
    """
    Why a property fails.

    reason: (Reason) the tag.
    k: the number of initial tokens the certificate is about.
    run: transition names fired from i^k, or None.
    marking: {place: count} reached by the run, or None.
    net: which net the run and marking refer to: "input" or "short-circuit".
    extra: further data depending on the reason (a firing count vector,
        a pumping run, the dead transitions ...).
    """
    def __init__(self, reason, k=None, run=None, marking=None, net="input", **extra):
        self.reason = reason
        self.k = k
        self.run = run
        self.marking = marking
        self.net = net
        self.extra = extra

    def to_dict(self):
        data = {"reason": self.reason.value}
        if self.k is not None:
            data["k"] = self.k
        if self.run is not None:
            data["run"] = list(self.run)
        if self.marking is not None:
            data["marking"] = dict(self.marking)
        data["net"] = self.net
        for key in sorted(self.extra):
            data[key] = self.extra[key]
        return data

    def __repr__(self):
        return "Certificate(%s, k=%s, run=%s, marking=%s)" % (self.reason.value, self.k, self.run, self.marking)


class Verdict(object):
    """
    The outcome of one decision procedure.
    """
    def __init__(self, prop, holds, certificate=None, complete=True, parameters=None, stats=None, details=None):
        """
        Args:
            prop: (str) the property checked, e.g. "k-sound".
            holds: (Holds) the answer.
            certificate: (Certificate) required when holds is FALSE.
            complete: (bool) False when a cap or a truncated bound limited the search.
            parameters: (dict) parameters used.
            stats: (dict) counters, "verticesExplored" at least.
            details: (dict) property specific extras, such as a quasi-liveness report.
        """
        if holds == Holds.UNKNOWN:
            complete = False
        self.property = prop
        self.holds = holds
        self.certificate = certificate
        self.complete = complete
        self.parameters = parameters or {}
        self.stats = stats or {"verticesExplored": 0}
        self.details = details or {}
        self.graph = None

    def add_vertices(self, count):
        self.stats["verticesExplored"] = self.stats.get("verticesExplored", 0) + count

    def to_dict(self):
        data = {
            "property": self.property,
            "holds": self.holds.value,
            "parameters": dict(self.parameters),
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "complete": self.complete,
            "stats": dict(self.stats),
        }
        if self.details:
            data["details"] = dict(self.details)
        return data

    def __repr__(self):
        return "Verdict(%s: %s, complete=%s, %r)" % (self.property, self.holds.value, self.complete,
                                                     self.certificate)


class SoundNums(object):
    """
    The set of sound numbers as {i * p : 1 <= i < k_limit}.

    p: smallest sound number, 0 when none was found.
    k_limit: the smallest c with c * p unsound, 0 when p = 0, None when no
        such c was found.
    infinite: True when k_limit is None, i.e. every checked multiple of p
        is sound.
    complete: False when p or k_limit came from a truncated scan.
    exact_up_to: sound_set(n) is certain for every n <= exact_up_to; None
        when the result is complete.
    """
    def __init__(self, p, k_limit, complete=True, checked_up_to=None, exact_up_to=None):
        self.p = p
        self.k_limit = k_limit
        self.complete = complete
        self.checked_up_to = checked_up_to
        self.exact_up_to = None if complete else (exact_up_to or 0)

    @property
    def infinite(self):
        return self.p > 0 and self.k_limit is None

    def is_exact(self, up_to):
        """
        Whether sound_set(up_to) is certain.
        """
        return self.complete or up_to <= self.exact_up_to

    def sound_set(self, up_to):
        """
        The sound numbers <= up_to described by (p, k_limit).
        """
        if not self.p:
            return set()
        return {i * self.p for i in range(1, up_to // self.p + 1)
                if self.k_limit is None or i < self.k_limit}

    def to_dict(self):
        data = {
            "p": self.p,
            "kLimit": self.k_limit,
            "infinite": self.infinite,
            "complete": self.complete,
        }
        if self.infinite and not self.complete:
            data["infiniteUpToCap"] = self.checked_up_to
        if not self.complete:
            data["exactUpTo"] = self.exact_up_to
        return data

    def __repr__(self):
        return "SoundNums(p=%s, kLimit=%s, complete=%s)" % (self.p, self.k_limit, self.complete)
