from .config import Budget
from .demo import demo
from .extension import ExtendedFrame, check_extension_HG, check_extension_PF, extend_frame, extend_prop_HG, extend_prop_PF, restrict_prop
from .induction import classify_inducibility, induce_R1, induce_R2, induce_R3, roundtrip_frame, starred_quadruple
from .lattice import LatticeSpec, Oml, build_lattice, check_orthomodular, complement, join_set, meet_set
from .read import read_frame, read_lattice, read_operators, read_propositions
from .report import Verdict, VerifyReport
from .sasaki import sasaki_and, sasaki_imp, sasaki_projection
from .tense import OperatorQuadruple, Proposition, Tense, eval_F, eval_G, eval_H, eval_P, frame_induced_quadruple, op_equal, op_leq
from .timeframe import TimeFrame, frame
from .verify import Instance, Suite, replay_witness, run_suite, run_suites
