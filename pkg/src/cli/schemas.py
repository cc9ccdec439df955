from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel

from src.services.communication import SubsetClassification


class ClassificationRecord(BaseModel):
    subset: str
    open: bool
    closed: bool
    clopen: bool
    box: str
    diamond: str
    arrow: str
    communicable: Dict[str, bool]

    @classmethod
    def from_classification(cls, c: SubsetClassification) -> "ClassificationRecord":
        return cls(
            subset=str(c.subset),
            open=c.open,
            closed=c.closed,
            clopen=c.clopen,
            box=str(c.box),
            diamond=str(c.diamond),
            arrow=str(c.arrow),
            communicable={s.value: v for s, v in c.communicable.items()},
        )


class AxiomsRecord(BaseModel):
    b1: bool
    b2: bool
    t2: bool


class ContinuityRecord(BaseModel):
    continuous: bool
    witness: Optional[Tuple[int, int]] = None   # (b, x)
    sigma: List[Tuple[int, int]]
    rho_sigma: List[Tuple[int, int]]
    communicable: bool


class CommunicableRecord(BaseModel):
    strategy: str
    subsets: List[str]
