"""
Integer programs of the form A.x >= b over nonnegative integer variables.

Equalities are stored as two opposite inequalities; every row keeps a
relation tag (">=" or "=") and a label so exported systems stay readable.
"""

from wfsound.common.utils.exception import WfsoundError, ERR


GE = ">="
EQ = "="


class IntegerProgram(object):
    """
    An (m x n) system A.x >= b. Instances are immutable.
    """
    def __init__(self, names, rows, constants, relations=None, labels=None, require_nonnegativity=True):
        """
        Args:
            names: (list) variable names, one per column.
            rows: (list) the rows of A, lists of ints.
            constants: (list) b, one int per row.
            relations: (list) GE or EQ per row, GE by default.
            labels: (list) a short description per row.
            require_nonnegativity: (bool) check that every variable has a
                row x_j >= b_j with b_j >= 0.
        """
        self.names = tuple(names)
        self.rows = tuple(tuple(int(a) for a in row) for row in rows)
        self.constants = tuple(int(b) for b in constants)
        self.relations = tuple(relations) if relations is not None else (GE,) * len(self.rows)
        self.labels = tuple(labels) if labels is not None else ("",) * len(self.rows)

        n = len(self.names)
        if len(self.constants) != len(self.rows) or len(self.relations) != len(self.rows) or \
                len(self.labels) != len(self.rows):
            raise WfsoundError(ERR.invalid_argument, "Inconsistent number of rows.")
        if any(len(row) != n for row in self.rows):
            raise WfsoundError(ERR.invalid_argument, "Every row needs %s coefficients." % n)

        if require_nonnegativity:
            for j, name in enumerate(self.names):
                if not any(self._is_lower_bound(row, b, j) for row, b in zip(self.rows, self.constants)):
                    raise WfsoundError(ERR.invalid_argument, "Variable %s has no nonnegativity row." % name,
                                       data={"variable": name})

    @staticmethod
    def _is_lower_bound(row, b, j):
        return b >= 0 and row[j] == 1 and all(a == 0 for k, a in enumerate(row) if k != j)

    @property
    def m(self):
        return len(self.rows)

    @property
    def n(self):
        return len(self.names)

    def index(self, name):
        return self.names.index(name)

    def norm(self):
        """
        ||G|| = ||A|| + ||b|| + m + n, with ||.|| the largest absolute entry.
        """
        a_norm = max((abs(a) for row in self.rows for a in row), default=0)
        b_norm = max((abs(b) for b in self.constants), default=0)
        return a_norm + b_norm + self.m + self.n

    def is_solution(self, values):
        """
        Exact check of A.values >= b.
        """
        if len(values) != self.n:
            return False
        return all(sum(a * x for a, x in zip(row, values)) >= b for row, b in zip(self.rows, self.constants))

    def with_rows(self, rows, constants, labels=None):
        """
        A new program with extra inequality rows appended.
        """
        labels = list(labels) if labels is not None else [""] * len(rows)
        return IntegerProgram(self.names,
                              list(self.rows) + list(rows),
                              list(self.constants) + list(constants),
                              list(self.relations) + [GE] * len(rows),
                              list(self.labels) + labels,
                              require_nonnegativity=False)

    def export_matrix(self):
        """
        One line per row: coefficients, relation, constant. Equalities are
        written once, as "=" rows.
        """
        lines = ["# variables: %s" % " ".join(self.names)]
        skip_next = False
        for row, b, relation, label in zip(self.rows, self.constants, self.relations, self.labels):
            if skip_next:
                skip_next = False
                continue
            if relation == EQ:
                # the second row of the pair is the negation of the first
                skip_next = True
            line = "%s %s %s" % (" ".join(str(a) for a in row), relation, b)
            if label:
                line += "  # %s" % label
            lines.append(line)
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return "IntegerProgram(%s x %s)" % (self.m, self.n)


class Solution(object):
    """
    A nonnegative integer solution of a program, verified on construction.
    """
    def __init__(self, program, values):
        values = tuple(int(v) for v in values)
        if any(v < 0 for v in values) or not program.is_solution(values):
            raise WfsoundError(ERR.internal, "Not a solution of the program.", data={"values": values})
        self.names = program.names
        self.values = values

    def __getitem__(self, name):
        return self.values[self.names.index(name)]

    def to_dict(self):
        return dict(zip(self.names, self.values))

    def __eq__(self, other):
        return isinstance(other, Solution) and (self.names, self.values) == (other.names, other.values)

    def __hash__(self):
        return hash((self.names, self.values))

    def __repr__(self):
        return "Solution(%s)" % self.to_dict()


def slack_extension(program):
    """
    The system G' used to bound solutions of G: one slack variable y_j per
    row j with A_j.x - y_j = 0 (two inequalities) and y_j >= b_j, which is
    a (3m x (m + n)) program.
    """
    m, n = program.m, program.n
    names = list(program.names) + ["y_%s" % j for j in range(m)]
    rows = []
    constants = []
    relations = []
    labels = []
    for j, (row, b) in enumerate(zip(program.rows, program.constants)):
        slack = [0] * m
        slack[j] = -1
        rows.append(list(row) + slack)
        rows.append([-a for a in row] + [-s for s in slack])
        constants += [0, 0]
        relations += [EQ, EQ]
        labels += ["slack %s" % j, ""]

        bound = [0] * (n + m)
        bound[n + j] = 1
        rows.append(bound)
        constants.append(b)
        relations.append(GE)
        labels.append("y_%s >= b_%s" % (j, j))

    return IntegerProgram(names, rows, constants, relations, labels, require_nonnegativity=False)
