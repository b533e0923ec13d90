"""
The error raised by wfsound.

Every failure carries a code from ERR, a message for the user and
optionally a dict locating the fault (a place, a transition, a line of a
net file).
"""


class WfsoundError(Exception):
    """
    WfsoundError(<ERR code>, <message>, data=<location>)

    str() gives the message, or the code's name when there is none.
    """
    def __init__(self, code, message=None, data=None):
        if message is None:
            super(WfsoundError, self).__init__()
        else:
            super(WfsoundError, self).__init__(message)
        self.code = code
        self.message = message
        self.data = data

    def __str__(self):
        if self.message is not None:
            return self.message
        return ERR.name_of(self.code)

    def describe(self):
        """
        "<code name>: <message>", with the location appended when known.
        """
        text = "%s: %s" % (ERR.name_of(self.code), self)
        if self.data:
            text += " %s" % ", ".join("%s=%s" % item for item in sorted(self.data.items()))
        return text


class ERR(object):
    """
    Error codes, grouped by the stage that raises them.
    """
    no_error = 0

    unknown = -1

    internal = 10000

    invalid_argument = 10001

    # net text format
    parse_error = 10100

    duplicate_identifier = 10101

    unknown_place = 10102

    invalid_weight = 10103

    duplicate_designation = 10104

    # workflow structure
    produces_into_initial = 10200

    consumes_from_final = 10201

    not_on_path = 10202

    # firing
    not_enabled = 10300

    overflow = 10301

    # exploration
    incomplete_graph = 10400

    not_bounded = 10401

    exceeded = 10402

    # solvers
    box_too_large = 10500

    scale_too_large = 10501

    # gadgets
    not_conservative = 10600

    sum_mismatch = 10601

    not_reversible = 10602

    generation_failed = 10603

    @classmethod
    def name_of(cls, code):
        for name, value in vars(cls).items():
            if value == code and type(value) == int:
                return name
        return "error %s" % (code,)
