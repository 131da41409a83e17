cubecomplex v1
# K_{2,3}: x, y, z have two medians.
vertex x
vertex y
vertex z
vertex p
vertex q
edge x p
edge y p
edge z p
edge x q
edge y q
edge z q
