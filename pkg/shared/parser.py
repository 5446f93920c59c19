from fractions import Fraction
from pathlib import Path
import logging

from shared.errors import ConfigError

logger = logging.getLogger(__name__)


def _split_name(spec: str) -> tuple[str, str]:
    """'heisenberg:3' -> ('heisenberg', '3'); 'k2,3' -> ('k', '2,3'); 'c4' -> ('c', '4')."""
    text = spec.strip().lower()
    head, colon, tail = text.partition(":")
    if colon and head.isalpha():
        return head, tail
    cut = len(text)
    for position, character in enumerate(text):
        if character.isdigit():
            cut = position
            break
    return text[:cut], text[cut:]


def parse_int(text: str, what: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ConfigError(f"cannot read {what} from '{text}'") from None


def parse_int_list(text: str, what: str = "integer list") -> list[int]:
    parts = [p for p in str(text).replace(";", ",").split(",") if p.strip()]
    if not parts:
        raise ConfigError(f"empty {what}")
    return [parse_int(p, what) for p in parts]


def parse_number(text) -> Fraction:
    """Exact value of '3/4', '0.75' or 1; floats keep their shortest decimal form."""
    if isinstance(text, Fraction):
        return text
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"cannot read a number from '{text}'") from None


def _parse_edges(text: str) -> list[tuple[int, int]]:
    edges = []
    for item in text.split(";"):
        item = item.strip()
        if not item:
            continue
        left, sep, right = item.partition("-")
        if not sep:
            raise ConfigError(f"edge '{item}' must look like i-j")
        edges.append((parse_int(left, "edge endpoint"), parse_int(right, "edge endpoint")))
    return edges


def _parse_rows(text: str) -> list[list]:
    """'1/2,1/4;0,1/4' -> rows of exact numbers (float text stays float)."""
    rows = []
    for line in text.split(";"):
        cells = [c.strip() for c in line.split(",") if c.strip()]
        row = []
        for cell in cells:
            if "." in cell or "e" in cell:
                try:
                    row.append(float(cell))
                except ValueError:
                    raise ConfigError(f"cannot read probability '{cell}'") from None
            else:
                row.append(parse_number(cell))
        rows.append(row)
    return rows


class ObjectParser:
    """
    Turns command-line object names into library objects.

    Graphs:        p1, c<2k>, path<m>[:2], k<a>,<b>, star<n>[:2], matching<m>, heisenberg:<p>,
                   pg:<p>, graph:<n1>,<n2>:<i>-<j>;..., or a JSON file path.
    Distributions: diag<k>, unif<k1>x<k2>, point, edges:<graph name>, rows:<r1>;<r2>, or a JSON path.
    Groups:        z<n>, d<n>, q8, s<n>, a<n>, heisenberg:<p>, or a JSON path.
    """

    def __init__(self, file_manager=None):
        if file_manager is None:
            from storage.file_manager import FileManager
            file_manager = FileManager()
        self.file_manager = file_manager

    @staticmethod
    def _is_path(spec: str) -> bool:
        return spec.strip().lower().endswith(".json") or Path(spec).is_file()

    def graph(self, spec: str):
        from bgraph import generators
        from groups.catalog import heisenberg
        from groups.cosets import coset_graph
        from groups.projective import projective_plane_incidence
        from models.bipartite_graph import BipartiteGraph

        if self._is_path(spec):
            return self.file_manager.read_graph(spec)

        name, arg = _split_name(spec)
        logger.debug("Parsing graph spec %r as (%s, %s)", spec, name, arg)
        if name in ("p", "edge") and arg in ("1", ""):
            return generators.single_edge()
        if name == "c":
            return generators.even_cycle(parse_int(arg, "cycle length"))
        if name in ("path", "star"):
            size, _, orientation = arg.partition(":")
            cls = parse_int(orientation, "orientation") if orientation else 1
            if name == "path":
                return generators.path(parse_int(size, "path length"), start_class=cls)
            return generators.star(parse_int(size, "star size"), center_class=cls)
        if name == "k":
            a, _, b = arg.partition(",")
            return generators.complete(parse_int(a, "class size"), parse_int(b, "class size"))
        if name == "matching":
            return generators.matching(parse_int(arg, "matching size"))
        if name == "heisenberg":
            return coset_graph(*heisenberg(parse_int(arg, "prime")))
        if name == "pg":
            return projective_plane_incidence(parse_int(arg, "prime"))
        if name == "graph":
            sizes, _, edges = arg.partition(":")
            n1, _, n2 = sizes.partition(",")
            return BipartiteGraph(parse_int(n1, "n1"), parse_int(n2, "n2"), tuple(_parse_edges(edges)))

        logger.error("Unknown graph spec: %s", spec)
        raise ConfigError(f"unknown graph '{spec}'")

    def distribution(self, spec: str):
        from entropy import information
        from models.joint_distribution import JointDistribution

        if self._is_path(spec):
            return self.file_manager.read_distribution(spec)

        text = spec.strip()
        name, arg = _split_name(text)
        if name == "diag":
            return information.diagonal(parse_int(arg, "alphabet size"))
        if name == "unif":
            k1, _, k2 = arg.partition("x")
            return information.uniform(parse_int(k1, "k1"), parse_int(k2, "k2"))
        if name == "point":
            return information.point_mass()
        if name == "edges":
            return information.from_graph(self.graph(text.partition(":")[2]))
        if name == "rows":
            return JointDistribution.from_rows(_parse_rows(text.partition(":")[2]))

        logger.error("Unknown distribution spec: %s", spec)
        raise ConfigError(f"unknown distribution '{spec}'")

    def group(self, spec: str):
        """A FiniteGroup, plus (T1, T2) when the name fixes them (heisenberg:<p>)."""
        from groups import catalog

        if self._is_path(spec):
            return self.file_manager.read_group(spec), None

        name, arg = _split_name(spec)
        if name == "heisenberg":
            group, t1, t2 = catalog.heisenberg(parse_int(arg, "prime"))
            return group, (t1, t2)
        builders = {
            "z": catalog.cyclic,
            "d": catalog.dihedral,
            "s": catalog.symmetric_group,
            "a": catalog.alternating_group,
        }
        if name == "q" and arg == "8":
            return catalog.quaternion(), None
        if name in builders:
            return builders[name](parse_int(arg, "group parameter")), None

        logger.error("Unknown group spec: %s", spec)
        raise ConfigError(f"unknown group '{spec}'")
