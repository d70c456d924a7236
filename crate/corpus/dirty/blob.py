ELF �M�%0�m,��#{.�?r�qD��I<�\4`�1 i�ڠ�蹙\|)����%<�T�M��'�����#/��!��ű�V;�o�B~���)U�͎F܎Է�vM*ZMvw�]��Jֽ�@�����5��a"j�S8�4 M3�$j�L����>;�����+I4���Ri�K�.��U�r�rcz�tf����c�䲺)p4t�d�h� ��+=�f�[ު,���+QWAM�J�OC
4G�cl�l�{���C���BM	�]LXH�=��6a�2� �f���~�g�F�>��%{�%l�>O�I�F�p0��SrR�έ�d��/�	���	ĩ� 9u5+��\�B؄�L��-�]�%�-�*q"�>��ՉBz8R�\g��i��[��	�	a�}�6��ɝnu�eGϱB$��S+Ð|��^P������}�o�] ��*�f.�-I����w+OǦ�L�J�Gu+D�5��	}���#/!�&�xiv���'��e'K���D���2o������<f�+���'��kk&.H��C�9�v���Q��ϚHհ��=� ���=d���!��'�ی�4�L�ߡa���h)