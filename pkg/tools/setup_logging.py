#!/usr/bin/env python3
# tools/setup_logging.py
"""
日誌設定模組
使用方法：from tools.setup_logging import setup_logging
        logger = setup_logging('core', log_dir=lattice_config.log_dir)
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler


def setup_logging(name: str, log_dir: str = '', level=logging.WARNING):
    """
    設定具名 logger：stderr 控制台 handler，指定 log_dir 時再加上輪轉檔案 handler

    Args:
        name: logger 名稱（core / solvers / main）
        log_dir: 日誌目錄，空字串代表不寫檔
        level: 日誌級別

    Returns:
        configured logger
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)
    logger.propagate = False

    # 已設定過就只更新級別
    if logger.handlers:
        for handler in logger.handlers:
            handler.setLevel(level)
        return logger

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    # 控制台 handler（stdout 只留給解）
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
        log_file = os.path.join(log_dir, f'{name.replace(".", "_")}.log')
        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=10*1024*1024,  # 10MB
            backupCount=5,
            encoding='utf-8'
        )
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def level_from_verbosity(verbosity: int, default: str = 'WARNING') -> int:
    """-v → INFO，-vv → DEBUG"""
    if verbosity >= 2:
        return logging.DEBUG
    if verbosity == 1:
        return logging.INFO
    level = logging.getLevelName(default.upper())
    return level if isinstance(level, int) else logging.WARNING
