"""Opposition diagrams over ordered structures with an antitone involution.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from oppo._core import *  # noqa: F401,F403
from oppo._core import __doc__  # noqa: F401
