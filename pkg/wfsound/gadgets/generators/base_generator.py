"""
Net generator's base class.
"""


class BaseGenerator(object):
    """
    A named net generator of the `gen` command.
    """
    # generator's key
    key = ""

    # generator's readable name
    name = ""

    def add_arguments(self, parser):
        """
        Add the generator's options to its argparse subparser.
        """
        pass

    def build(self, args):
        """
        Build the net.

        Args:
            args: (Namespace) parsed options.

        Returns:
            (WorkflowNet, dict): the net and the parameters echoed in the
                output header.
        """
        raise NotImplementedError
