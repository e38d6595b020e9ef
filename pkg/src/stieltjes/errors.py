"""Exception hierarchy. Every engine error carries a stable message code for the CLI."""


class StieltjesError(Exception):
    code = "E_STIELTJES"


class OutOfDomain(StieltjesError, ValueError):
    code = "E_OUT_OF_DOMAIN"


class DomainMismatch(StieltjesError, ValueError):
    code = "E_DOMAIN_MISMATCH"


class Unsupported(StieltjesError):
    code = "E_UNSUPPORTED"


class DegreeError(StieltjesError, ValueError):
    code = "E_DEGREE"


class IrrationalRoot(StieltjesError):
    code = "E_IRRATIONAL_ROOT"


class NonMonotonePiece(StieltjesError):
    code = "E_NON_MONOTONE_PIECE"


class NotBV(StieltjesError):
    code = "E_NOT_BV"


class NotIncreasing(StieltjesError):
    code = "E_NOT_INCREASING"


class EndpointDiscontinuity(StieltjesError):
    code = "E_ENDPOINT_DISCONTINUITY"


class DirichletUnsupported(StieltjesError):
    code = "E_DIRICHLET_UNSUPPORTED"


class NotDSIntegrable(StieltjesError):
    code = "E_NOT_DS_INTEGRABLE"


class NoConvergence(StieltjesError):
    code = "E_NO_CONVERGENCE"


class MeshUnachievable(StieltjesError):
    code = "E_MESH_UNACHIEVABLE"
