#!/usr/bin/env python3
# core/metrics.py
"""
列舉 delay 監控模組
追蹤兩次輸出之間的成員測試次數（membership test）
"""

import time
from typing import Dict, List, Optional

import pandas as pd


class EnumerationMetrics:
    """
    單次列舉的 delay 計數器

    gaps[i] 是第 i 個解輸出前（自上一個解或開始算起）做的測試次數；
    最後一個解之後的測試另記在 tail。
    """

    def __init__(self, bound: Optional[int] = None):
        self.start_time = time.time()
        self.bound = bound

        self.tests = 0
        self.emissions = 0
        self.gaps: List[int] = []
        self._since_last = 0
        self.emission_times: List[float] = []

    def record_test(self, count: int = 1):
        """記錄成員測試"""
        self.tests += count
        self._since_last += count

    def record_emission(self):
        """記錄輸出一個解"""
        self.emissions += 1
        self.gaps.append(self._since_last)
        self._since_last = 0
        self.emission_times.append(time.time() - self.start_time)

    @property
    def tail(self) -> int:
        return self._since_last

    @property
    def max_gap(self) -> int:
        return max(self.gaps + [self.tail])

    @property
    def mean_gap(self) -> float:
        if not self.gaps:
            return float(self.tail)
        return float(pd.Series(self.gaps, dtype='float64').mean())

    def within_bound(self) -> bool:
        return self.bound is None or self.max_gap <= self.bound

    def summary(self) -> Dict[str, float]:
        """數值摘要（pandas describe）"""
        series = pd.Series(self.gaps + [self.tail], dtype='float64')
        stats = series.describe()
        return {
            'emissions': self.emissions,
            'tests': self.tests,
            'max_gap': int(stats['max']),
            'mean_gap': self.mean_gap,
            'std_gap': float(stats['std']) if len(series) > 1 else 0.0,
            'elapsed': time.time() - self.start_time,
        }

    def stats_line(self) -> str:
        """CLI `--delay-stats` 的輸出行（不含時間，輸出可重現）"""
        line = f"delay: max={self.max_gap} mean={self.mean_gap:.2f} tests={self.tests} emissions={self.emissions}"
        if self.bound is not None:
            line += f" bound={self.bound}"
        return line

    def get_report(self) -> str:
        """生成報告"""
        s = self.summary()
        verdict = "🟢 在上限內" if self.within_bound() else "🔴 超過上限"
        bound = self.bound if self.bound is not None else "-"
        report = f"""
📊 **列舉 delay 報告**

⏰ 耗時: {s['elapsed']:.3f}s
🧮 解的數量: {s['emissions']}
🔍 成員測試總數: {s['tests']}
📈 最大間隔: {s['max_gap']}（上限 {bound}）
⚡ 平均間隔: {s['mean_gap']:.2f}

**判定**: {verdict}
"""
        return report.strip()
