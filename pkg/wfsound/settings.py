"""
Master configuration file for wfsound.

NOTE: NO MODIFICATIONS SHOULD BE MADE TO THIS FILE!

To change a default, subclass Settings in your own file and pass it to the
launcher with --settings, or call SETTINGS.update() with an instance of the
subclass. Anything you don't override keeps its default value.

"""

import logging


class Settings(object):
    """
    Default settings.
    """

    def update(self, settings):
        """
        Update configs with another Settings object.
        """
        for name in settings.__class__.__dict__:
            value = getattr(settings, name)
            if name[0] != "_" and not callable(value):
                setattr(self, name, value)

    ######################################################################
    # Exploration settings
    ######################################################################

    # Maximum number of markings stored in one reachability graph.
    MAX_VERTICES = 1000000

    # Maximum number of nodes of a Karp-Miller tree.
    KM_NODE_CAP = 1000000

    # Markings are 64-bit; any entry reaching this value is an overflow.
    MARKING_LIMIT = 2 ** 63

    ######################################################################
    # Decision settings
    ######################################################################

    # Largest k scanned by the generalised and structural checks.
    K_MAX = 64

    # Constant substituted for the hidden constants of O(.) exponents.
    BOUND_CONSTANT = 1

    ######################################################################
    # Solver settings
    ######################################################################

    # Search nodes allowed to the box-bounded integer search.
    BOX_NODE_BUDGET = 2000000

    # Rows allowed in any intermediate system of the variable elimination.
    ELIMINATION_ROW_CAP = 200000

    # Search nodes allowed to the Steinitz reordering.
    STEINITZ_NODE_BUDGET = 2000000

    # Box used to search a small witness of the structural system.
    STRUCTURAL_WITNESS_BOX = 8

    ######################################################################
    # Generator settings
    ######################################################################

    # Attempts made by the random generators before giving up.
    RANDOM_RETRIES = 1000

    # Where the net generators are loaded from.
    PATH_GENERATORS_BASE = "wfsound.gadgets.generators"

    ######################################################################
    # Logging settings
    ######################################################################
    LOG_NAME = "wfsound"
    LOG_FILE = None
    LOG_LEVEL = logging.WARNING

    # Also print logs to the console.
    LOG_TO_CONSOLE = False


SETTINGS = Settings()
