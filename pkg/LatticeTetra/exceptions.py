# LatticeTetra exceptions
#
#  Every error raised on purpose by this package extends LatticeTetraError, so callers
#   can catch the whole family at once. The CLI maps each family onto an exit code.
#

# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :

__all__ = ('LatticeTetraError', 'InvalidInputError', 'FormulaViolationError',
	'GeometryError', 'NoIntegralBasisError', 'ApexError', 'NotLatticeRegularError',
	'GuardError', 'CacheFormatError',
)


class LatticeTetraError(Exception):
	'''
		LatticeTetraError - Base of all LatticeTetra errors
	'''
	pass


class InvalidInputError(LatticeTetraError, ValueError):
	'''
		InvalidInputError - An argument violated an operation's precondition
		  (even d where odd is required, non-prime p, (m,n) = (0,0), ...)
	'''
	pass


class FormulaViolationError(LatticeTetraError, ArithmeticError):
	'''
		FormulaViolationError - A closed-form identity did not hold exactly.

		  This always means a bug, never bad input.
	'''
	pass


class GeometryError(LatticeTetraError):
	'''
		GeometryError - A lattice construction failed its postcondition
	'''
	pass


class NoIntegralBasisError(GeometryError):
	'''
		NoIntegralBasisError - No (r, s) gave an integral face basis for a solution
	'''
	pass


class ApexError(GeometryError):
	'''
		ApexError - The fourth vertex does not complete a regular tetrahedron
	'''
	pass


class NotLatticeRegularError(GeometryError):
	'''
		NotLatticeRegularError - A face normal failed the a^2+b^2+c^2 = 3d^2 test
	'''
	pass


class GuardError(LatticeTetraError):
	'''
		GuardError - A brute force oracle was asked for a size above its guard
	'''
	pass


class CacheFormatError(LatticeTetraError):
	'''
		CacheFormatError - A cache line could not be decoded or failed validation.

		  @ivar lineNumber <int> - 1-origin line number in the cache file
		  @ivar line <str> - The offending line, stripped
	'''

	def __init__(self, message, lineNumber=None, line=None):
		self.lineNumber = lineNumber
		self.line = line
		if lineNumber is not None:
			message = 'line %d: %s  [%s]' %(lineNumber, message, line)
		LatticeTetraError.__init__(self, message)


# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :
