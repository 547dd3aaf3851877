from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class BenchmarkRow:
    method: str
    maps: tuple[float, ...]          # 임계값 순서대로, [0, 1] 비율
    run: Optional[str] = None        # 예: 데이터 증강 전략 이름
    section: Optional[str] = None    # 예: "reference", "ours"


@dataclass(frozen=True)
class BenchmarkTable:
    thresholds: tuple[float, ...]
    rows: tuple[BenchmarkRow, ...]
    config_hash: Optional[str] = None
    tool_version: Optional[str] = None

    def best_by_threshold(self) -> dict[float, str]:
        """ 임계값별 mAP 최고 방법 (동률이면 먼저 나온 행) """
        best: dict[float, str] = {}
        for i, threshold in enumerate(self.thresholds):
            if not self.rows:
                continue
            winner = max(self.rows, key=lambda row: row.maps[i])
            best[threshold] = winner.method
        return best

    @property
    def has_runs(self) -> bool:
        return any(row.run is not None for row in self.rows)
