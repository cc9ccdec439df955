# src/core/config.py
import os
import logging
from dotenv import load_dotenv

load_dotenv()

# --- Границы перебора для подмножественных сьютов ---
DEFAULT_MAX_X = int(os.environ.get("BP_MAX_X", 3))
DEFAULT_MAX_S = int(os.environ.get("BP_MAX_S", 3))

# --- Границы для сьютов по отношениям (вторая пара Y, T) ---
DEFAULT_MAX_Y = int(os.environ.get("BP_MAX_Y", 2))
DEFAULT_MAX_T = int(os.environ.get("BP_MAX_T", 2))
# Четырёхсторонний перебор при |X|,|S| = 3 уже слишком тяжёлый, поэтому
# X и S в relation-сьютах режутся до этого значения.
RELATION_SWEEP_MAX = int(os.environ.get("BP_RELATION_SWEEP_MAX", 2))

# --- Случайная выборка размера 3 для relation-сьютов ---
SAMPLE_SIZE = int(os.environ.get("BP_SAMPLE_SIZE", 10_000))
SAMPLE_DIM = int(os.environ.get("BP_SAMPLE_DIM", 3))
DEFAULT_SEED = int(os.environ.get("BP_SEED", 20240917))

# --- Топологии ---
MAX_TOPOLOGY_GROUND = 4  # больше не перебираем: 2^(2^n - 2) семейств
REMARK_MAX_GROUND = int(os.environ.get("BP_REMARK_MAX_GROUND", 3))

# --- Отчёты / исполнение ---
REPORT_MAX_WITNESSES = int(os.environ.get("BP_REPORT_MAX_WITNESSES", 10))
DEFAULT_WORKERS = int(os.environ.get("BP_WORKERS", 1))

# --- Логирование ---
LOG_LEVEL = os.environ.get("LOG_LEVEL", "WARNING").upper()
LOG_DIR = os.environ.get("LOG_DIR")  # None — без файлового handler'а
LOGTAIL_SOURCE_TOKEN = os.environ.get("LOGTAIL_SOURCE_TOKEN")
LOGTAIL_HOST = os.environ.get("LOGTAIL_HOST")


def check_initial_config():
    """
    Проверяет значения из окружения при старте CLI.
    """
    logger = logging.getLogger(__name__)
    bounds = {
        "BP_MAX_X": DEFAULT_MAX_X,
        "BP_MAX_S": DEFAULT_MAX_S,
        "BP_MAX_Y": DEFAULT_MAX_Y,
        "BP_MAX_T": DEFAULT_MAX_T,
        "BP_RELATION_SWEEP_MAX": RELATION_SWEEP_MAX,
        "BP_SAMPLE_SIZE": SAMPLE_SIZE,
        "BP_SAMPLE_DIM": SAMPLE_DIM,
    }
    for name, value in bounds.items():
        if value < 0:
            logger.critical("%s must be >= 0, got %d", name, value)
            exit(f"Критическая ошибка: {name} отрицательный.")
    if not 0 <= REMARK_MAX_GROUND <= MAX_TOPOLOGY_GROUND:
        logger.critical("BP_REMARK_MAX_GROUND must be within 0..%d", MAX_TOPOLOGY_GROUND)
        exit("Критическая ошибка: BP_REMARK_MAX_GROUND вне диапазона.")
    if DEFAULT_WORKERS < 1:
        logger.critical("BP_WORKERS must be >= 1, got %d", DEFAULT_WORKERS)
        exit("Критическая ошибка: BP_WORKERS < 1.")
    if max(DEFAULT_MAX_X, DEFAULT_MAX_S) > 4:
        logger.warning(
            "BP_MAX_X/BP_MAX_S above 4: subset sweeps grow as 2^(|X||S|), expect long runs."
        )
    if SAMPLE_SIZE == 0:
        logger.warning("BP_SAMPLE_SIZE=0: relation suites run without the size-%d sample.", SAMPLE_DIM)
