"""
All available net generators.
"""

from wfsound.settings import SETTINGS
from wfsound.utils.logger import logger
from wfsound.common.utils.utils import classes_in_path
from wfsound.gadgets.generators.base_generator import BaseGenerator


class GeneratorSet(object):
    """
    All available generators, by key.
    """
    def __init__(self):
        self.dict = {}

    def load(self):
        """
        Add all generators from the path.
        """
        for cls in classes_in_path(SETTINGS.PATH_GENERATORS_BASE, BaseGenerator):
            key = cls.key
            if key:
                if key in self.dict:
                    logger.log_debug("Generator %s is replaced by %s." % (key, cls))
                self.dict[key] = cls()

    def get(self, key):
        """
        Get the generator.
        """
        return self.dict.get(key, None)

    def all(self):
        """
        Get all generator keys, sorted.
        """
        return sorted(self.dict.keys())


GENERATOR_SET = GeneratorSet()
GENERATOR_SET.load()
