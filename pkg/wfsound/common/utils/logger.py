"""
Logging facilities

Thin wrappers on the logging module. Every message is split into lines and
each line is tagged with its severity. Logs go to a daily rotated file and,
optionally, to stderr so that they never mix with a command's output.

"""
import sys
from traceback import format_exc
import logging
from logging.handlers import TimedRotatingFileHandler


LOG_FORMAT = "[%(asctime)s] - %(message)s"


class Logger(object):
    """
    The logger object.
    """
    def __init__(self, log_name, log_level, log_file=None, log_to_console=False):
        self.logger = self.setup_log(log_name, log_level, log_file, log_to_console)

    def setup_log(self, log_name, log_level, log_file=None, log_to_console=False):
        """
        Create a logger.
        """
        logger = logging.getLogger(log_name)
        logger.setLevel(log_level)

        # keep records out of the root logger's handlers
        logger.propagate = False

        if log_file:
            file_handler = TimedRotatingFileHandler(filename=log_file, when="MIDNIGHT", interval=1)
            file_handler.suffix = "%Y-%m-%d.log"
            file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
            logger.addHandler(file_handler)

        if log_to_console:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setFormatter(logging.Formatter(LOG_FORMAT))
            logger.addHandler(console_handler)

        if not logger.handlers:
            logger.addHandler(logging.NullHandler())

        return logger

    def set_level(self, log_level):
        """
        Change the level of an existing logger.
        """
        self.logger.setLevel(log_level)

    def _write(self, level, tag, msg):
        if not self.logger.isEnabledFor(level):
            return
        try:
            msg = str(msg)
        except Exception as e:
            msg = str(e)
        for line in msg.splitlines():
            self.logger.log(level, "[%s] %s" % (tag, line))

    def log_trace(self, errmsg=None):
        """
        Log a traceback to the log. This should be called from within an
        exception.

        Args:
            errmsg (str, optional): Adds an extra line with added info
                at the end of the traceback in the log.

        """
        trace_string = format_exc()
        if trace_string:
            self._write(logging.ERROR, "::", trace_string)
        if errmsg:
            self._write(logging.ERROR, "EE", errmsg)

    def log_critical(self, msg):
        self._write(logging.CRITICAL, "CC", msg)

    def log_err(self, errmsg):
        self._write(logging.ERROR, "EE", errmsg)

    def log_warn(self, warnmsg):
        """
        Warnings that aren't errors but should be noted, such as an
        exploration stopped by a cap.
        """
        self._write(logging.WARNING, "WW", warnmsg)

    def log_info(self, infomsg):
        self._write(logging.INFO, "..", infomsg)

    def log_debug(self, msg):
        self._write(logging.DEBUG, "DD", msg)

    def log_result(self, name, outcome, complete=True, explored=None):
        """
        One line summing up a decision.

        Args:
            name (str): what was decided, e.g. "2-sound".
            outcome (str): "true", "false" or "unknown".
            complete (bool): False when a cap or K_max cut the search;
                the line is then a warning.
            explored (int, optional): markings explored.
        """
        text = "%s: %s" % (name, outcome)
        if explored is not None:
            text += " (%s markings)" % explored
        if complete:
            self._write(logging.INFO, "..", text)
        else:
            self._write(logging.WARNING, "WW", text + ", incomplete")
