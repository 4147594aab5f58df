from semigrass import consts


class Config:
    def __init__(self):
        self._enumeration_cap = consts.DEFAULT_ENUMERATION_CAP
        self._term_cap = consts.DEFAULT_TERM_CAP
        self._truncation = consts.DEFAULT_TRUNCATION  # K for the infinite model
        self._orthogonality_truncation = consts.ORTHOGONALITY_TRUNCATION
        self._debug_window_check = False
        self._seed = consts.DEFAULT_SEED

    def set_enumeration_cap(self, cap: int) -> None:
        if cap < 1:
            raise ValueError("Enumeration cap must be a positive integer")
        self._enumeration_cap = cap

    def get_enumeration_cap(self) -> int:
        return self._enumeration_cap

    def set_term_cap(self, cap: int) -> None:
        if cap < 1:
            raise ValueError("Series term cap must be a positive integer")
        self._term_cap = cap

    def get_term_cap(self) -> int:
        return self._term_cap

    def set_truncation(self, K: int) -> None:
        if K < 1:
            raise ValueError("Truncation K must be at least 1")
        self._truncation = K

    def get_truncation(self) -> int:
        return self._truncation

    def set_orthogonality_truncation(self, K: int) -> None:
        if K < 1:
            raise ValueError("Orthogonality truncation must be at least 1")
        self._orthogonality_truncation = K

    def get_orthogonality_truncation(self) -> int:
        return self._orthogonality_truncation

    def set_debug_window_check(self, enabled: bool) -> None:
        self._debug_window_check = bool(enabled)

    def get_debug_window_check(self) -> bool:
        return self._debug_window_check

    def set_seed(self, seed: int) -> None:
        if not 0 <= seed < 2**64:
            raise ValueError("Seed must be a 64-bit unsigned integer")
        self._seed = seed

    def get_seed(self) -> int:
        return self._seed


config = Config()
