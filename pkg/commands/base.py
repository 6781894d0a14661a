from rings import build_ring, parse_element, parse_ideal
from utils.errors import ConsistencyError, ParameterError

from .output import emit, save


class CommandBase:
    """A computation over one coefficient ring, configured by a frozen cfg.

    ``run`` returns a result record. Theorem violations found along the way go
    into ``self.problems``; ``execute`` emits the record first and raises
    afterwards, so a failing run still leaves its full dump behind.
    """

    def __init__(self, cfg):
        self.check_cfg(cfg)
        self.cfg = cfg
        self.ring = build_ring(cfg.RING.SPEC)
        self.r = cfg.RANK
        self.problems = []

    def check_cfg(self, cfg):
        if cfg.RANK < 2:
            raise ParameterError(f"rank r must be >= 2, got {cfg.RANK}")

    def run(self):
        raise NotImplementedError

    def ideal(self, text):
        return parse_ideal(self.ring, text)

    def element(self, text):
        return parse_element(self.ring, text)

    def level(self):
        """IDEAL.N, or the least proper integral ideal when it is empty."""
        if self.cfg.IDEAL.N.strip():
            n = self.ideal(self.cfg.IDEAL.N)
            if not n.is_integral() or n.is_unit():
                raise ParameterError(f"level {n} is not a proper integral ideal")
            return n
        d = 1
        while not self.ring.effective_ideals_of_degree(d):
            d += 1
        return self.ring.effective_ideals_of_degree(d)[0]

    def execute(self):
        record = self.run()
        print(emit(record, self.cfg.FORMAT))
        fpath = save(record, self.cfg.FORMAT, self.cfg.OUTPUT_DIR)
        if fpath:
            print(f"Result saved to {fpath}")
        if self.problems:
            raise ConsistencyError("; ".join(self.problems))
        return record
