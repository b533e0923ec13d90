"""
Logging facilities

The shared logger of the library, configured from SETTINGS.

"""

from wfsound.common.utils.logger import Logger
from wfsound.settings import SETTINGS


logger = Logger(SETTINGS.LOG_NAME, SETTINGS.LOG_LEVEL, SETTINGS.LOG_FILE, SETTINGS.LOG_TO_CONSOLE)
