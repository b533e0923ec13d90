#!/usr/bin/env python
"""
Helpers of the command line launcher.
"""

import sys
from subprocess import check_output, CalledProcessError, STDOUT
from argparse import ArgumentParser

from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.launcher import configs


# ------------------------------------------------------------
#
# Functions
#
# ------------------------------------------------------------


def wfsound_version():
    """
    Get the version info from the main package.
    """
    version = "Unknown"
    try:
        import wfsound
        version = wfsound.__version__
    except ImportError:
        pass
    try:
        rev = check_output("git rev-parse --short HEAD", shell=True, cwd=configs.WFSOUND_ROOT, stderr=STDOUT).strip()
        if rev and b" " not in rev:
            version = "%s (rev %s)" % (version, rev.decode())
    except (IOError, CalledProcessError):
        pass
    return version


class CommandParser(ArgumentParser):
    """
    An ArgumentParser raising WfsoundError instead of exiting on bad input.
    """
    def error(self, message):
        raise WfsoundError(ERR.invalid_argument, "%s: %s" % (self.prog, message))


def print_error(message):
    print(message, file=sys.stderr)
