#!/usr/bin/env python
"""
Messages and exit codes of the command line launcher.
"""

import os

from wfsound.common.utils.defines import Holds


WFSOUND_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


# ------------------------------------------------------------
#
# Exit codes
#
# ------------------------------------------------------------

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64
EXIT_INTERNAL = 70

HOLDS_EXIT_CODES = {
    Holds.TRUE: EXIT_HOLDS,
    Holds.FALSE: EXIT_FAILS,
    Holds.UNKNOWN: EXIT_UNKNOWN,
}


# ------------------------------------------------------------
#
# Messages
#
# ------------------------------------------------------------

VERSION_INFO = \
    """
    wfsound {version}
    OS: {os}
    Python: {python}
    """

ABOUT_INFO = \
    """
    wfsound: soundness checks for workflow nets

    Licence: BSD 3-Clause Licence

    Use -h for command line options.
    """

ERROR_INPUT = \
    """
    Command
    {args}
    raised an error: '{error}'.
    """

ERROR_COMMAND = "Unknown command '{command}'. Use -h for command line options."

ERROR_GENERATOR = "Unknown generator '{key}'. Available generators: {keys}."

ERROR_SETTINGS = "Can not load settings '{path}': {error}"

CMDLINE_HELP = \
"""
Checks soundness properties of workflow nets and builds example nets.

usage: wfsound [--json] [--node-cap N] [--settings PATH] operation

operations:
  wfsound validate FILE
    Check the workflow net conditions.

  wfsound classical FILE
    Classical soundness: 1-soundness and quasi-liveness.

  wfsound ksound --k K FILE
    k-soundness, through 1-soundness of the scaled net.

  wfsound generalised [--k-max K] [--constant C] FILE
    k-soundness for every k.

  wfsound structural [--k-max K] [--constant C] FILE
    k-soundness for some k.

  wfsound sound-numbers [--k-max K] [--constant C] FILE
    The set of k for which the net is k-sound.

  wfsound oracle --k K FILE
    k-soundness from the explicit reachability graph of i^k.

  wfsound graph [--k K] FILE
    Edge list of the reachability graph of i^k.

  wfsound ilp {n|s} FILE
    Matrix of one of the integer programs of the net.

  wfsound gen GENERATOR [options] [-o FILE]
    Write a generated net. Use 'wfsound gen GENERATOR -h' for its options.

global options:
  --json                Print a JSON document instead of text.
  --node-cap N          Store at most N markings or tree nodes per exploration.
  --settings PATH       Dotted path of a Settings subclass to apply first.
  -h, --help            Show help messages.
  -v, --version         Show version info.

exit codes:
  0 the property holds, 1 it fails, 2 unknown (a cap was hit),
  64 usage or parse error, 70 internal error.
"""
