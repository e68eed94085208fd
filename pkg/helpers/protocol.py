"""Line protocol spoken with an external character oracle.

One exchange per query, each line terminated by a newline:

    tool -> peer   Q <cycle type>          e.g. `Q 6,2`  (a full cycle type of n)
    peer -> tool   A <signed integer>      e.g. `A -1`

When the run is over the tool writes `RESULT <partition>` (or
`RESULT NOT_IRREDUCIBLE`) followed by one line of JSON summary. Anything else
coming back from the peer, including end of input, is a protocol error.
"""
import re
from typing import Optional

from errors import ProtocolError
from objects.partitions import Partition

ANSWER_LINE = re.compile(r"^A (?P<value>[+-]?\d+)$")

NOT_IRREDUCIBLE = "NOT_IRREDUCIBLE"


def format_query(cycle_type: Partition) -> str:
    return f"Q {cycle_type}\n"


def parse_answer(line: str) -> int:
    """Reads an `A <int>` reply.

    Raises:
        ProtocolError: on end of input or any other line.
    """

    if not line:
        raise ProtocolError("Peer closed the stream before answering.")

    match = ANSWER_LINE.match(line.strip())
    if match is None:
        raise ProtocolError(f"Malformed reply {line.strip()!r}, expected 'A <integer>'.")

    return int(match["value"])


def format_result(partition: Optional[Partition]) -> str:
    if partition is None:
        return f"RESULT {NOT_IRREDUCIBLE}\n"
    return f"RESULT {partition}\n"
