from enum import Enum

class VotingStrategyEnum(str, Enum):
    AFFIRMATIVE = "affirmative"   # 한 모델만 검출해도 채택
    CONSENSUS   = "consensus"     # 과반(> n/2) 모델 동의
    UNANIMOUS   = "unanimous"     # 모든 모델 동의
