"""
This module writes nets in the line oriented net format.
"""

import os

from wfsound.common.utils.exception import WfsoundError, ERR


class NetWriter(object):
    """
    Net document writer.
    """
    file_ext = "net"

    def __init__(self, filename=None):
        """
        Args:
            filename: (String) the document's file name, optional.
        """
        self.filename = filename
        self.lines = []

    def writeln(self, line):
        """
        Write a line.
        """
        self.lines.append(line)

    def write_comment(self, text):
        for line in text.splitlines():
            self.writeln("# %s" % line)

    def write_net(self, net, initial=None, final=None):
        """
        Write every place and transition of a net.
        """
        for place in net.places:
            if place == initial:
                self.writeln("place %s initial" % place)
            elif place == final:
                self.writeln("place %s final" % place)
            else:
                self.writeln("place %s" % place)

        for t, name in enumerate(net.transitions):
            pre = format_bag(net, net.pre[t])
            post = format_bag(net, net.post[t])
            line = "trans %s :" % name
            if pre:
                line += " " + pre
            line += " ->"
            if post:
                line += " " + post
            self.writeln(line)

    def text(self):
        if not self.lines:
            return ""
        return "\n".join(self.lines) + "\n"

    def save(self):
        """
        Save the file, creating its folder when missing.
        """
        if not self.filename:
            raise WfsoundError(ERR.invalid_argument, "The writer has no file name.")
        folder = os.path.dirname(self.filename)
        if folder and not os.path.exists(folder):
            os.makedirs(folder)
        with open(self.filename, "w", encoding="utf-8") as f:
            f.write(self.text())


def format_bag(net, bag):
    items = []
    for p, w in bag:
        if w == 1:
            items.append(net.places[p])
        else:
            items.append("%s*%s" % (w, net.places[p]))
    return ", ".join(items)


def _document(net, initial, final, header, filename=None):
    if hasattr(net, "initial"):
        initial = initial or net.initial
        final = final or net.final
        net = net.net

    writer = NetWriter(filename)
    if header:
        writer.write_comment(header)
    writer.write_net(net, initial, final)
    return writer


def serialize_net(net, initial=None, final=None, header=None):
    """
    Write a net as text.

    Args:
        net: (PetriNet or WorkflowNet) the net.
        initial: (str) the initial place, taken from a WorkflowNet if omitted.
        final: (str) the final place, taken from a WorkflowNet if omitted.
        header: (str) an optional comment written before the net.
    """
    return _document(net, initial, final, header).text()


def write_net_file(filename, net, initial=None, final=None, header=None):
    """
    Save a net to a file, as serialize_net writes it.
    """
    _document(net, initial, final, header, filename).save()
