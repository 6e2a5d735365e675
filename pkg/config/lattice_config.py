"""
Lattice Dualization Configuration
桌面規模上限、隨機種子與日誌設定
"""
import os
from dataclasses import dataclass

from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name, '').strip()
    return int(raw) if raw else default


@dataclass
class LatticeConfig:
    """對偶化工具配置參數"""

    # ===== 暴力 oracle =====
    oracle_cap: int = 20                 # 最多 20 個元素（最壞 2^20 個子集）

    # ===== Berge 基準列舉 =====
    transversal_vertex_cap: int = 64     # 超圖頂點數上限
    transversal_edge_cap: int = 256      # 超邊數上限
    family_cap: int = 200000             # 中間極小橫截族的大小上限

    # ===== 隨機實例 =====
    default_seed: int = 0

    # ===== 日誌 =====
    log_dir: str = ''                    # 空字串 = 不寫檔
    log_level: str = 'WARNING'

    @classmethod
    def from_env(cls) -> 'LatticeConfig':
        """從環境變數（含 .env）建立配置"""
        return cls(
            oracle_cap=_env_int('LATTICE_ORACLE_CAP', cls.oracle_cap),
            transversal_vertex_cap=_env_int('LATTICE_TRANSVERSAL_VERTEX_CAP', cls.transversal_vertex_cap),
            transversal_edge_cap=_env_int('LATTICE_TRANSVERSAL_EDGE_CAP', cls.transversal_edge_cap),
            family_cap=_env_int('LATTICE_FAMILY_CAP', cls.family_cap),
            default_seed=_env_int('LATTICE_SEED', cls.default_seed),
            log_dir=os.getenv('LATTICE_LOG_DIR', cls.log_dir),
            log_level=os.getenv('LATTICE_LOG_LEVEL', cls.log_level).upper(),
        )

    def with_oracle_cap(self, cap: int) -> 'LatticeConfig':
        """覆寫 oracle 上限（Berge 上限不低於它）"""
        return LatticeConfig(
            oracle_cap=cap,
            transversal_vertex_cap=max(self.transversal_vertex_cap, cap),
            transversal_edge_cap=self.transversal_edge_cap,
            family_cap=self.family_cap,
            default_seed=self.default_seed,
            log_dir=self.log_dir,
            log_level=self.log_level,
        )

    def get_summary(self) -> str:
        """獲取配置摘要"""
        return (
            f"oracle 上限：{self.oracle_cap} 個元素\n"
            f"Berge 上限：{self.transversal_vertex_cap} 頂點 / {self.transversal_edge_cap} 超邊 / "
            f"{self.family_cap} 個中間解\n"
            f"預設種子：{self.default_seed}"
        )


# 全局配置實例
lattice_config = LatticeConfig.from_env()
