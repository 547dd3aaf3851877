import numpy as np

from src.exception.config_exceptions import ConfigException


class RandomProvider:
    """
    재현 가능한 난수 생성기를 제공하는 유틸리티 클래스.
    numpy PCG64 비트 생성기를 SeedSequence로 초기화합니다.
    """

    @staticmethod
    def generator(seed: int) -> np.random.Generator:
        """ 시드 하나로 초기화된 Generator (split 셔플 등) """
        RandomProvider._check_seed(seed)
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))

    @staticmethod
    def image_stream(seed: int, image_index: int) -> np.random.Generator:
        """
        (seed, 이미지 순번)으로 분기한 이미지별 Generator.
        이미지 처리 순서와 무관하게 같은 값을 생성합니다.
        """
        RandomProvider._check_seed(seed)
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, image_index])))

    @staticmethod
    def _check_seed(seed: int):
        if seed < 0:
            raise ConfigException(f"시드는 0 이상의 정수여야 합니다: {seed}")
